#include "document.hpp"

#include <charconv>  // for from_chars
#include <optional>  // for optional
#include <sstream>   // for istringstream

namespace tolrep {

  BinRel const* Document::find(std::string_view rel) const noexcept {
    for (auto const& [name, r] : relations) {
      if (name == rel) {
        return &r;
      }
    }
    return nullptr;
  }

  BinRel const& Document::relation(std::string_view rel) const {
    auto const* r = find(rel);
    if (r == nullptr) {
      throw LookupError("document has no relation named " + std::string(rel));
    }
    return *r;
  }

  namespace {
    bool is_keyword(std::string_view w) {
      return w == "algebra" || w == "size" || w == "op" || w == "rel";
    }

    std::vector<std::string> split(std::string_view line) {
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      std::vector<std::string> out;
      std::istringstream       is{std::string(line)};
      std::string              w;
      while (is >> w) {
        out.push_back(std::move(w));
      }
      return out;
    }

    std::size_t to_number(std::string const& w, std::size_t line) {
      std::size_t value = 0;
      auto [ptr, ec]    = std::from_chars(w.data(), w.data() + w.size(), value);
      if (ec != std::errc() || ptr != w.data() + w.size()) {
        throw FormatError(line, "expected a non-negative integer, got '" + w + "'");
      }
      return value;
    }

    struct PendingOp {
      std::string          name;
      std::size_t          arity;
      std::size_t          expected;
      std::size_t          line;
      std::vector<element> table;
    };

    struct PendingRel {
      std::string       name;
      std::vector<Pair> pairs;
    };
  }  // namespace

  Document parse_document(std::string_view text) {
    std::optional<std::string> name;
    std::optional<std::size_t> size;
    std::vector<OperationTable>                  ops;
    std::vector<std::pair<std::string, BinRel>> rels;
    std::optional<PendingOp>                     op;
    std::optional<PendingRel>                    rel;

    auto finish_op = [&](std::size_t line) {
      if (!op) {
        return;
      }
      if (op->table.size() != op->expected) {
        throw FormatError(line,
                          "operation " + op->name + " of arity "
                              + std::to_string(op->arity) + " needs "
                              + std::to_string(op->expected) + " entries, got "
                              + std::to_string(op->table.size()));
      }
      ops.emplace_back(op->name, op->arity, *size, std::move(op->table));
      op.reset();
    };
    auto finish_rel = [&] {
      if (!rel) {
        return;
      }
      rels.emplace_back(rel->name, BinRel::reflexive_from_pairs(*size, rel->pairs));
      rel.reset();
    };
    auto require_header = [&](std::size_t line, std::string const& kw) {
      if (!name || !size) {
        throw FormatError(line, "'" + kw + "' before 'algebra' and 'size'");
      }
    };

    std::size_t line_no = 0;
    std::size_t start   = 0;
    while (start <= text.size()) {
      auto        end  = text.find('\n', start);
      auto const  line = text.substr(
          start, end == std::string_view::npos ? std::string_view::npos : end - start);
      start = end == std::string_view::npos ? text.size() + 1 : end + 1;
      ++line_no;

      auto const words = split(line);
      if (words.empty()) {
        continue;
      }
      auto const& kw = words[0];
      if (is_keyword(kw)) {
        finish_op(line_no);
        finish_rel();
        if (kw == "algebra") {
          if (name) {
            throw FormatError(line_no, "duplicate 'algebra'");
          }
          if (words.size() != 2) {
            throw FormatError(line_no, "expected 'algebra NAME'");
          }
          name = words[1];
        } else if (kw == "size") {
          if (!name) {
            throw FormatError(line_no, "'size' before 'algebra'");
          }
          if (size) {
            throw FormatError(line_no, "duplicate 'size'");
          }
          if (words.size() != 2) {
            throw FormatError(line_no, "expected 'size N'");
          }
          std::size_t const n = to_number(words[1], line_no);
          if (n == 0 || n > BinRel::max_size) {
            throw FormatError(line_no,
                              "size must be in [1, "
                                  + std::to_string(BinRel::max_size) + "]");
          }
          size = n;
        } else if (kw == "op") {
          require_header(line_no, kw);
          if (words.size() != 3) {
            throw FormatError(line_no, "expected 'op NAME ARITY'");
          }
          for (auto const& o : ops) {
            if (o.name() == words[1]) {
              throw FormatError(line_no, "duplicate operation name " + words[1]);
            }
          }
          std::size_t const arity    = to_number(words[2], line_no);
          std::size_t       expected = 1;
          for (std::size_t i = 0; i < arity; ++i) {
            expected *= *size;
            if (expected > (std::size_t(1) << 24)) {
              throw FormatError(line_no, "operation table too large");
            }
          }
          op = PendingOp{words[1], arity, expected, line_no, {}};
        } else {
          require_header(line_no, kw);
          if (words.size() != 2) {
            throw FormatError(line_no, "expected 'rel NAME'");
          }
          for (auto const& r : rels) {
            if (r.first == words[1]) {
              throw FormatError(line_no, "duplicate relation name " + words[1]);
            }
          }
          rel = PendingRel{words[1], {}};
        }
        continue;
      }

      if (op) {
        for (auto const& w : words) {
          std::size_t const v = to_number(w, line_no);
          if (v >= *size) {
            throw FormatError(line_no,
                              "element " + w + " out of range in operation "
                                  + op->name);
          }
          if (op->table.size() == op->expected) {
            throw FormatError(line_no,
                              "operation " + op->name + " has more than "
                                  + std::to_string(op->expected) + " entries");
          }
          op->table.push_back(static_cast<element>(v));
        }
      } else if (rel) {
        if (words.size() != 2) {
          throw FormatError(line_no, "expected a pair 'a b' in relation " + rel->name);
        }
        std::size_t const a = to_number(words[0], line_no);
        std::size_t const b = to_number(words[1], line_no);
        if (a >= *size || b >= *size) {
          throw FormatError(line_no,
                            "element out of range in relation " + rel->name);
        }
        rel->pairs.emplace_back(static_cast<element>(a), static_cast<element>(b));
      } else {
        throw FormatError(line_no, "unknown keyword '" + kw + "'");
      }
    }
    finish_op(line_no);
    finish_rel();
    if (!name || !size) {
      throw FormatError(line_no, "missing 'algebra' or 'size'");
    }
    return Document{*name, Algebra(*size, std::move(ops)), std::move(rels)};
  }

  void append_relation(std::string& out, std::string_view name, BinRel const& r) {
    out += "rel ";
    out += name;
    out += '\n';
    for (auto [a, b] : r.off_diagonal_pairs()) {
      out += std::to_string(a) + ' ' + std::to_string(b) + '\n';
    }
  }

  std::string print_document(Document const& doc) {
    std::size_t const n   = doc.algebra.size();
    std::string       out = "algebra " + doc.name + "\nsize " + std::to_string(n) + "\n";
    for (auto const& op : doc.algebra.operations()) {
      out += "op " + op.name() + ' ' + std::to_string(op.arity()) + '\n';
      auto const& table = op.table();
      for (std::size_t i = 0; i < table.size(); ++i) {
        out += std::to_string(table[i]);
        out += (i + 1) % n == 0 || i + 1 == table.size() ? '\n' : ' ';
      }
    }
    for (auto const& [name, r] : doc.relations) {
      append_relation(out, name, r);
    }
    return out;
  }

  Document to_document(CorpusEntry const& entry) {
    Document doc{entry.name, entry.algebra, {}};
    for (auto const& [name, r] : entry.relations) {
      doc.relations.emplace_back(name, unite(r, BinRel::diagonal(r.size())));
    }
    return doc;
  }

  std::string print_corpus_entry(CorpusEntry const& entry) {
    std::string out = "# " + entry.notes + "\n# elements:";
    for (std::size_t i = 0; i < entry.element_names.size(); ++i) {
      out += ' ' + entry.element_names[i] + '=' + std::to_string(i);
    }
    out += '\n';
    return out + print_document(to_document(entry));
  }

}  // namespace tolrep
