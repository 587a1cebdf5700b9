#include "cli.hpp"

#include <fstream>  // for ifstream, ofstream
#include <sstream>  // for ostringstream

#include "CLI11.hpp"
#include "json.hpp"

#include "acceptance.hpp"
#include "document.hpp"
#include "tolrep/decide.hpp"
#include "tolrep/relterms.hpp"

namespace tolrep::cli {

  namespace {
    using nlohmann::json;

    struct Report {
      std::string text;
      json        data;
      int         code = holds;
    };

    std::string yes_no(bool b) {
      return b ? "yes" : "no";
    }

    json pairs_json(BinRel const& r) {
      json out = json::array();
      for (auto [a, b] : r.off_diagonal_pairs()) {
        out.push_back({a, b});
      }
      return out;
    }

    Document load(std::string const& file) {
      constexpr std::string_view prefix = "corpus:";
      if (file.starts_with(prefix)) {
        return to_document(corpus_get(file.substr(prefix.size())));
      }
      std::ifstream in(file);
      if (!in) {
        throw LookupError("cannot open " + file);
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      return parse_document(buf.str());
    }

    void write_file(std::string const& path, std::string const& text) {
      std::ofstream out(path);
      if (!out || !(out << text)) {
        throw LookupError("cannot write " + path);
      }
    }

    Report check(Document const& doc,
                 std::string const& rel,
                 std::string const& witness) {
      BinRel const& r     = doc.relation(rel);
      Shape const   shape = classify_shape(r);
      bool const    compat = is_compatible(doc.algebra, r);
      RelationKind const kind = classify_relation(doc.algebra, r);

      Report rep;
      rep.text = "relation " + rel + " on " + std::to_string(r.size())
                 + " elements\n"
                 + "reflexive: " + yes_no(shape.reflexive) + "\n"
                 + "symmetric: " + yes_no(shape.symmetric) + "\n"
                 + "transitive: " + yes_no(shape.transitive) + "\n"
                 + "compatible: " + yes_no(compat) + "\n"
                 + "admissible: " + yes_no(kind.admissible) + "\n"
                 + "tolerance: " + yes_no(kind.tolerance) + "\n"
                 + "congruence: " + yes_no(kind.congruence) + "\n";
      rep.data = {{"command", "check"},
                  {"relation", rel},
                  {"reflexive", shape.reflexive},
                  {"symmetric", shape.symmetric},
                  {"transitive", shape.transitive},
                  {"compatible", compat},
                  {"admissible", kind.admissible},
                  {"tolerance", kind.tolerance},
                  {"congruence", kind.congruence}};
      bool ok = kind.tolerance;
      if (!witness.empty()) {
        Verdict const v
            = verify_representation(doc.algebra, r, doc.relation(witness));
        rep.text += "witness " + witness + ": "
                    + (v ? std::string("verified") : "rejected (" + v.reason + ")")
                    + "\n";
        rep.data["witness"] = {{"name", witness}, {"verified", v.ok}, {"reason", v.reason}};
        ok = ok && v.ok;
      }
      rep.code = ok ? holds : fails;
      return rep;
    }

    Report represent(Document const&      doc,
                     std::string const&   rel,
                     bool                 show_witness,
                     SearchOptions const& opts) {
      BinRel const& theta = doc.relation(rel);
      SearchStats   stats;
      auto const    found = find_representation(doc.algebra, theta, opts, &stats);

      Report rep;
      rep.text = rel + (found ? " is representable\n" : " is not representable\n")
                 + "search nodes: " + std::to_string(stats.nodes) + "\n";
      rep.data = {{"command", "represent"},
                  {"relation", rel},
                  {"representable", found.has_value()},
                  {"nodes", stats.nodes}};
      if (found) {
        rep.data["witness"] = pairs_json(found->relation);
        if (show_witness) {
          append_relation(rep.text, rel + "_witness", found->relation);
        }
      }
      rep.code = found ? holds : fails;
      return rep;
    }

    Report weak_represent(Document const&      doc,
                          std::string const&   rel,
                          bool                 show_witness,
                          SearchOptions const& opts) {
      BinRel const& theta = doc.relation(rel);
      auto const    found = find_weak_representation(doc.algebra, theta, opts);

      Report rep;
      rep.data = {{"command", "weak-represent"},
                  {"relation", rel},
                  {"weakly_representable", found.has_value()}};
      if (!found) {
        rep.text = rel + " is not weakly representable\n";
        rep.code = fails;
        return rep;
      }
      rep.text = rel + " is weakly representable ("
                 + std::to_string(found->separators.size()) + " separators)\n";
      json seps = json::array();
      for (auto const& [p, r] : found->separators) {
        seps.push_back({{"pair", {p.first, p.second}}, {"pairs", pairs_json(r)}});
        if (show_witness) {
          append_relation(rep.text,
                          rel + "_sep_" + std::to_string(p.first) + "_"
                              + std::to_string(p.second),
                          r);
        }
      }
      rep.data["separators"] = std::move(seps);
      return rep;
    }

    Report expand_cmd(Document const&    doc,
                      std::string const& rel,
                      std::string const& output) {
      ExpansionStats stats;
      Document       plus{doc.name + "_plus",
                    expand(doc.algebra, doc.relation(rel), &stats),
                    doc.relations};
      write_file(output, print_document(plus));
      Report rep;
      rep.text = "added " + std::to_string(stats.distinct)
                 + " unary operations ("
                 + std::to_string(stats.generated_off_diagonal) + " maps over "
                 + std::to_string(stats.off_diagonal_pairs) + " related pairs, "
                 + std::to_string(stats.generated_constants)
                 + " constants, before removing duplicates)\nwrote " + output
                 + "\n";
      rep.data = {{"command", "expand"},
                  {"relation", rel},
                  {"off_diagonal_pairs", stats.off_diagonal_pairs},
                  {"generated_off_diagonal", stats.generated_off_diagonal},
                  {"generated_constants", stats.generated_constants},
                  {"distinct", stats.distinct},
                  {"output", output}};
      return rep;
    }

    Report enumerate_cmd(Document const&    doc,
                         std::string const& kind,
                         std::size_t        limit,
                         SearchOptions      opts) {
      std::vector<BinRel> rels;
      bool                truncated = false;
      std::string         label;
      if (kind == "admissible") {
        auto e    = enumerate_admissible(doc.algebra, limit);
        rels      = std::move(e.relations);
        truncated = e.truncated;
        label     = "admissible";
      } else {
        opts.relation_budget = limit;
        if (kind == "tolerances") {
          rels  = enumerate_tolerances(doc.algebra, opts);
          label = "tolerance";
        } else {
          rels  = enumerate_congruences(doc.algebra, opts);
          label = "congruence";
        }
      }
      Report rep;
      rep.text = std::to_string(rels.size()) + " " + kind
                 + (truncated ? " (truncated)" : "") + "\n";
      json list = json::array();
      for (std::size_t i = 0; i < rels.size(); ++i) {
        append_relation(rep.text, label + "_" + std::to_string(i), rels[i]);
        list.push_back(pairs_json(rels[i]));
      }
      rep.data = {{"command", "enumerate"},
                  {"kind", kind},
                  {"count", rels.size()},
                  {"truncated", truncated},
                  {"relations", std::move(list)}};
      return rep;
    }

    Report permutable_cmd(Document const& doc, SearchOptions const& opts) {
      auto const report = check_permutability(doc.algebra, opts);
      Report     rep;
      rep.data = {{"command", "permutable"}, {"permutable", report.permutable}};
      if (report.permutable) {
        rep.text = "congruences permute\n";
        return rep;
      }
      auto const& cx = *report.counterexample;
      rep.text = "congruences do not permute: (" + std::to_string(cx.pair.first)
                 + "," + std::to_string(cx.pair.second)
                 + ") lies in alpha o beta but not in beta o alpha\n";
      append_relation(rep.text, "alpha", cx.alpha);
      append_relation(rep.text, "beta", cx.beta);
      rep.data["counterexample"] = {{"alpha", pairs_json(cx.alpha)},
                                    {"beta", pairs_json(cx.beta)},
                                    {"pair", {cx.pair.first, cx.pair.second}}};
      rep.code = fails;
      return rep;
    }

    Report term_eval(Document const&                 doc,
                     std::string const&              term,
                     std::vector<std::string> const& binds,
                     bool                            square,
                     std::string const&              subset_of) {
      Environment env;
      for (auto const& b : binds) {
        auto eq = b.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == b.size()) {
          throw ArgumentError("--bind expects VAR=REL, got " + b);
        }
        env.insert_or_assign(b.substr(0, eq), doc.relation(b.substr(eq + 1)));
      }
      RelTerm const p       = parse_term(term);
      Environment   used    = square ? square_environment(env) : env;
      BinRel const  value   = eval_term(p, used);

      Report rep;
      rep.data = {{"command", "term-eval"},
                  {"term", to_string(p)},
                  {"square", square},
                  {"result", pairs_json(value)}};
      append_relation(rep.text, "result", value);
      if (!subset_of.empty()) {
        RelTerm const q = parse_term(subset_of);
        bool const    holds_ = square ? check_identity_iv(doc.algebra, p, q, env)
                                      : is_subset(value, eval_term(q, used));
        rep.text += to_string(p) + " <= " + to_string(q) + ": "
                    + (holds_ ? "holds" : "fails") + "\n";
        rep.data["subset_of"] = to_string(q);
        rep.data["inclusion"] = holds_;
        rep.code              = holds_ ? holds : fails;
      }
      return rep;
    }

    Report term_regular(std::string const& term) {
      RelTerm const   t = parse_term(term);
      TermGraph const g = term_graph(t);
      bool const      regular = is_regular(t);
      Report          rep;
      rep.text = to_string(t) + ": " + std::to_string(g.vertex_count)
                 + " vertices, " + std::to_string(g.edges.size()) + " edges, "
                 + (regular ? "regular" : "not regular") + "\n";
      json edges = json::array();
      for (auto const& e : g.edges) {
        edges.push_back({{"u", e.u}, {"v", e.v}, {"label", e.label}});
      }
      rep.data = {{"command", "term-regular"},
                  {"term", to_string(t)},
                  {"regular", regular},
                  {"vertices", g.vertex_count},
                  {"source", g.source},
                  {"sink", g.sink},
                  {"edges", std::move(edges)}};
      rep.code = regular ? holds : fails;
      return rep;
    }

    Report corpus_cmd(std::string const& name, std::string const& output) {
      std::string const text = print_corpus_entry(corpus_get(name));
      Report            rep;
      rep.data = {{"command", "corpus"}, {"name", name}};
      if (output.empty()) {
        rep.text            = text;
        rep.data["document"] = text;
      } else {
        write_file(output, text);
        rep.text           = "wrote " + output + "\n";
        rep.data["output"] = output;
      }
      return rep;
    }

    Report verify_paper(std::ostream& out, bool as_json) {
      auto const results = acceptance::run_all(as_json ? nullptr : &out);
      Report     rep;
      json       list    = json::array();
      std::size_t passed = 0;
      for (auto const& r : results) {
        passed += r.passed;
        list.push_back({{"id", r.id},
                        {"title", r.title},
                        {"passed", r.passed},
                        {"detail", r.detail},
                        {"seconds", r.seconds}});
      }
      rep.text = std::to_string(passed) + "/" + std::to_string(results.size())
                 + " criteria passed\n";
      rep.data = {{"command", "verify-paper"}, {"criteria", std::move(list)}};
      rep.code = passed == results.size() ? holds : fails;
      return rep;
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"tolrep: representable tolerances of finite algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    bool        as_json     = false;
    std::size_t node_budget = default_node_budget;
    std::size_t rel_budget  = default_relation_budget;
    app.add_flag("--json", as_json, "Print a JSON object instead of text");
    app.add_option("--node-budget", node_budget, "Search node budget")
        ->capture_default_str();
    app.add_option("--rel-budget", rel_budget, "Relation enumeration budget")
        ->capture_default_str();

    std::string file, rel, witness_rel, output, kind = "tolerances", term,
                                              subset_of, name;
    bool                     witness = false, square = false;
    std::size_t              limit   = 0;
    std::vector<std::string> binds;

    auto* check_cmd = app.add_subcommand("check", "Classify a relation");
    check_cmd->add_option("file", file, "Document or corpus:NAME")->required();
    check_cmd->add_option("--rel", rel, "Relation name")->required();
    check_cmd->add_option("--witness", witness_rel,
                          "Verify this relation R as theta = R o R^-");

    auto* rep_cmd = app.add_subcommand("represent", "Decide theta = R o R^-");
    rep_cmd->add_option("file", file)->required();
    rep_cmd->add_option("--rel", rel)->required();
    rep_cmd->add_flag("--witness", witness, "Print the witness relation");

    auto* weak_cmd = app.add_subcommand("weak-represent",
                                        "Decide weak representability");
    weak_cmd->add_option("file", file)->required();
    weak_cmd->add_option("--rel", rel)->required();
    weak_cmd->add_flag("--witness", witness, "Print every separator");

    auto* expand_sub = app.add_subcommand("expand", "Add the unary operations "
                                                    "that pin a tolerance");
    expand_sub->add_option("file", file)->required();
    expand_sub->add_option("--rel", rel)->required();
    expand_sub->add_option("-o,--output", output)->required();

    auto* enum_cmd = app.add_subcommand("enumerate", "List relations");
    enum_cmd->add_option("file", file)->required();
    enum_cmd->add_option("--kind", kind)
        ->check(CLI::IsMember({"tolerances", "congruences", "admissible"}));
    enum_cmd->add_option("--limit", limit, "Maximum number of relations");

    auto* perm_cmd = app.add_subcommand("permutable",
                                        "Check that all congruences permute");
    perm_cmd->add_option("file", file)->required();

    auto* eval_cmd = app.add_subcommand("term-eval", "Evaluate a relation term");
    eval_cmd->add_option("file", file)->required();
    eval_cmd->add_option("--term", term)->required();
    eval_cmd->add_option("--bind", binds, "VAR=REL")->take_all();
    eval_cmd->add_flag("--square", square, "Replace every theta by theta o theta");
    eval_cmd->add_option("--subset-of", subset_of,
                         "Also check that the term is contained in this one");

    auto* reg_cmd = app.add_subcommand("term-regular", "Regularity of a term");
    reg_cmd->add_option("--term", term)->required();

    auto* corpus_sub = app.add_subcommand("corpus", "Print a corpus entry");
    corpus_sub->add_option("name", name)->required();
    corpus_sub->add_option("-o,--output", output);

    auto* verify_cmd = app.add_subcommand("verify-paper",
                                          "Run the full acceptance suite");

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? holds : usage;
    }

    SearchOptions opts;
    opts.node_budget     = node_budget;
    opts.relation_budget = rel_budget;

    try {
      Report rep;
      if (check_cmd->parsed()) {
        rep = check(load(file), rel, witness_rel);
      } else if (rep_cmd->parsed()) {
        rep = represent(load(file), rel, witness, opts);
      } else if (weak_cmd->parsed()) {
        rep = weak_represent(load(file), rel, witness, opts);
      } else if (expand_sub->parsed()) {
        rep = expand_cmd(load(file), rel, output);
      } else if (enum_cmd->parsed()) {
        rep = enumerate_cmd(load(file), kind, limit == 0 ? rel_budget : limit, opts);
      } else if (perm_cmd->parsed()) {
        rep = permutable_cmd(load(file), opts);
      } else if (eval_cmd->parsed()) {
        rep = term_eval(load(file), term, binds, square, subset_of);
      } else if (reg_cmd->parsed()) {
        rep = term_regular(term);
      } else if (corpus_sub->parsed()) {
        rep = corpus_cmd(name, output);
      } else if (verify_cmd->parsed()) {
        rep = verify_paper(out, as_json);
      }
      if (as_json) {
        rep.data["exit_code"] = rep.code;
        out << rep.data.dump(2) << '\n';
      } else {
        out << rep.text;
      }
      return rep.code;
    } catch (ResourceError const& e) {
      err << "resource budget exceeded: " << e.what() << '\n';
      return resource;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
      return usage;
    }
  }

}  // namespace tolrep::cli
