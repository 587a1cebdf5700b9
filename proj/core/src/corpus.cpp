#include "tolrep/corpus.hpp"

#include <charconv>  // for from_chars

#include "tolrep/errors.hpp"

namespace tolrep {

  BinRel const& CorpusEntry::relation(std::string_view rel) const {
    auto it = relations.find(std::string(rel));
    if (it == relations.end()) {
      throw LookupError("corpus entry " + name + " has no relation "
                        + std::string(rel));
    }
    return it->second;
  }

  namespace {
    BinRel symmetric_reflexive(std::size_t n, std::vector<Pair> const& gens) {
      BinRel r = BinRel::diagonal(n);
      for (auto [a, b] : gens) {
        r.insert(a, b);
        r.insert(b, a);
      }
      return r;
    }

    std::vector<element> binary_table(std::size_t n, auto&& f) {
      std::vector<element> table(n * n);
      for (element x = 0; x < n; ++x) {
        for (element y = 0; y < n; ++y) {
          table[x * n + y] = f(x, y);
        }
      }
      return table;
    }

    // Lattice from its order; join and meet are computed as least upper
    // and greatest lower bounds.
    CorpusEntry lattice_from_order(std::string              name,
                                   BinRel const&            leq,
                                   std::vector<std::string> names,
                                   std::string              notes) {
      std::size_t const n = leq.size();
      auto bound = [&](element x, element y, bool upper) {
        auto below = [&](element u, element v) {
          return upper ? leq.test(u, v) : leq.test(v, u);
        };
        for (element z = 0; z < n; ++z) {
          if (!below(x, z) || !below(y, z)) {
            continue;
          }
          bool least = true;
          for (element w = 0; w < n && least; ++w) {
            if (below(x, w) && below(y, w) && !below(z, w)) {
              least = false;
            }
          }
          if (least) {
            return z;
          }
        }
        throw Error(name + ": order is not a lattice");
      };
      std::vector<OperationTable> ops;
      ops.emplace_back("join", 2, n, binary_table(n, [&](element x, element y) {
                         return bound(x, y, true);
                       }));
      ops.emplace_back("meet", 2, n, binary_table(n, [&](element x, element y) {
                         return bound(x, y, false);
                       }));
      return CorpusEntry{std::move(name),
                         Algebra(n, std::move(ops)),
                         std::move(names),
                         {{"leq", leq}},
                         std::move(notes)};
    }

    // a, b_1, ..., b_k, c numbered 0..k+1
    std::vector<Pair> chain_generators(element k) {
      std::vector<Pair> gens;
      for (element i = 1; i <= k; ++i) {
        gens.emplace_back(0, i);
        gens.emplace_back(i, k + 1);
      }
      return gens;
    }

    BinRel seven_theta() {
      auto gens = chain_generators(4);
      for (element x = 0; x < 6; ++x) {
        gens.emplace_back(6, x);
      }
      return symmetric_reflexive(7, gens);
    }

    std::vector<std::string> const seven_names
        = {"a", "b1", "b2", "b3", "b4", "c", "1"};

    std::size_t parse_number(std::string_view text, std::string_view whole) {
      std::size_t value = 0;
      auto [ptr, ec]    = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw ArgumentError("bad parameter '" + std::string(text)
                            + "' in corpus name " + std::string(whole));
      }
      return value;
    }
  }  // namespace

  namespace corpus {
    CorpusEntry five_set() {
      return CorpusEntry{"five_set",
                         Algebra(5),
                         {"a", "b1", "b2", "b3", "c"},
                         {{"theta", symmetric_reflexive(5, chain_generators(3))}},
                         "five-element set without operations; theta is the "
                         "smallest reflexive symmetric relation with a ~ b_i "
                         "and b_i ~ c for i = 1, 2, 3; not representable"};
    }

    CorpusEntry s7_semilattice() {
      std::size_t const n    = 7;
      auto              join = binary_table(n, [](element x, element y) {
        return x == y ? x : element(6);
      });
      BinRel            leq  = BinRel::diagonal(n);
      for (element x = 0; x < n; ++x) {
        leq.insert(x, 6);
      }
      std::vector<OperationTable> ops;
      ops.emplace_back("join", 2, n, std::move(join));
      return CorpusEntry{"s7_semilattice",
                         Algebra(n, std::move(ops)),
                         seven_names,
                         {{"theta", seven_theta()}, {"leq", leq}},
                         "join semilattice with six minimal elements "
                         "a, b1..b4, c and a top 1; theta relates 1 to "
                         "everything and a ~ b_i ~ c; not representable"};
    }

    CorpusEntry l7_majority() {
      // The ambient lattice: bottom 0, atoms 1..6, top 7.
      std::size_t const m    = 8;
      auto              join = [](element x, element y) -> element {
        if (x == y || y == 0) {
          return x;
        }
        return x == 0 ? y : 7;
      };
      auto meet = [](element x, element y) -> element {
        if (x == y || y == 7) {
          return x;
        }
        return x == 7 ? y : 0;
      };
      std::size_t const    n = m - 1;
      std::vector<element> table(n * n * n);
      for (element x = 0; x < n; ++x) {
        for (element y = 0; y < n; ++y) {
          for (element z = 0; z < n; ++z) {
            element const ax = x + 1, ay = y + 1, az = z + 1;
            element const v
                = meet(meet(join(ax, ay), join(ax, az)), join(ay, az));
            if (v == 0) {
              throw Error("l7_majority: carrier is not closed under f");
            }
            table[(x * n + y) * n + z] = v - 1;
          }
        }
      }
      std::vector<OperationTable> ops;
      ops.emplace_back("f", 3, n, std::move(table));
      return CorpusEntry{"l7_majority",
                         Algebra(n, std::move(ops)),
                         seven_names,
                         {{"theta", seven_theta()}},
                         "nonzero elements of the lattice with six atoms "
                         "a, b1..b4, c under the majority operation "
                         "f(x,y,z) = (x+y)(x+z)(y+z); same theta as "
                         "s7_semilattice; not representable"};
    }

    CorpusEntry m3() {
      BinRel leq = BinRel::diagonal(5);
      for (element x = 0; x < 5; ++x) {
        leq.insert(0, x);
        leq.insert(x, 4);
      }
      return lattice_from_order("m3",
                                leq,
                                {"0", "a", "b", "c", "1"},
                                "the diamond: three atoms between 0 and 1");
    }

    CorpusEntry n5() {
      BinRel leq = BinRel::diagonal(5);
      for (element x = 0; x < 5; ++x) {
        leq.insert(0, x);
        leq.insert(x, 4);
      }
      leq.insert(1, 2);
      return lattice_from_order("n5",
                                leq,
                                {"0", "a", "b", "c", "1"},
                                "the pentagon: 0 < a < b < 1 and 0 < c < 1");
    }

    CorpusEntry chain(std::size_t k) {
      if (k == 0 || k > BinRel::max_size) {
        throw ArgumentError("chain length must be in [1, "
                            + std::to_string(BinRel::max_size) + "]");
      }
      BinRel                   leq(k);
      std::vector<std::string> names;
      for (element x = 0; x < k; ++x) {
        names.push_back(std::to_string(x));
        for (element y = x; y < k; ++y) {
          leq.insert(x, y);
        }
      }
      return lattice_from_order("chain(" + std::to_string(k) + ")",
                                leq,
                                std::move(names),
                                "the chain 0 < 1 < ... < k-1");
    }

    CorpusEntry theta_ab(std::size_t n, element a, element b) {
      if (n < 2 || n > BinRel::max_size || a >= n || b >= n || a == b) {
        throw ArgumentError("theta_ab needs 2 <= n and distinct a, b < n");
      }
      BinRel theta = BinRel::full(n);
      theta.erase(a, b);
      theta.erase(b, a);
      // x R y iff x = y = a, or x = y = b, or x is neither a nor b
      BinRel r = BinRel::diagonal(n);
      for (element x = 0; x < n; ++x) {
        if (x != a && x != b) {
          r.set_row(x, r.universe_mask());
        }
      }
      std::vector<std::string> names;
      for (element x = 0; x < n; ++x) {
        names.push_back(std::to_string(x));
      }
      return CorpusEntry{"theta_ab(" + std::to_string(n) + ","
                             + std::to_string(a) + "," + std::to_string(b)
                             + ")",
                         Algebra(n),
                         std::move(names),
                         {{"theta", theta}, {"R", r}},
                         "set without operations; theta omits only the pair "
                         "{a, b} and equals R o R^-"};
    }

    CorpusEntry expand_five() {
      CorpusEntry base  = five_set();
      BinRel      theta = base.relation("theta");
      return CorpusEntry{"expand_five",
                         expand(base.algebra, theta),
                         base.element_names,
                         {{"theta", theta}},
                         "five_set expanded by every unary map into a "
                         "theta-related pair; theta is not even weakly "
                         "representable"};
    }
  }  // namespace corpus

  CorpusEntry corpus_get(std::string_view name) {
    std::string_view head = name;
    std::vector<std::size_t> params;
    if (auto open = name.find('('); open != std::string_view::npos) {
      if (name.back() != ')') {
        throw LookupError("malformed corpus name " + std::string(name));
      }
      head                  = name.substr(0, open);
      std::string_view args = name.substr(open + 1, name.size() - open - 2);
      while (true) {
        auto comma = args.find(',');
        params.push_back(parse_number(args.substr(0, comma), name));
        if (comma == std::string_view::npos) {
          break;
        }
        args.remove_prefix(comma + 1);
      }
    }
    auto no_params = [&] {
      if (!params.empty()) {
        throw ArgumentError("corpus entry " + std::string(head)
                            + " takes no parameters");
      }
    };
    if (head == "five_set") {
      no_params();
      return corpus::five_set();
    } else if (head == "s7_semilattice") {
      no_params();
      return corpus::s7_semilattice();
    } else if (head == "l7_majority") {
      no_params();
      return corpus::l7_majority();
    } else if (head == "m3") {
      no_params();
      return corpus::m3();
    } else if (head == "n5") {
      no_params();
      return corpus::n5();
    } else if (head == "expand_five") {
      no_params();
      return corpus::expand_five();
    } else if (head == "chain") {
      if (params.size() != 1) {
        throw ArgumentError("chain takes one parameter, e.g. chain(4)");
      }
      return corpus::chain(params[0]);
    } else if (head == "theta_ab") {
      if (params.size() != 3) {
        throw ArgumentError("theta_ab takes three parameters, e.g. "
                            "theta_ab(5,0,1)");
      }
      if (params[1] >= BinRel::max_size || params[2] >= BinRel::max_size) {
        throw ArgumentError("theta_ab: element out of range");
      }
      return corpus::theta_ab(params[0],
                              static_cast<element>(params[1]),
                              static_cast<element>(params[2]));
    }
    throw LookupError("unknown corpus entry " + std::string(name));
  }

  std::vector<std::string> corpus_names() {
    return {"five_set",
            "s7_semilattice",
            "l7_majority",
            "m3",
            "n5",
            "chain(k)",
            "theta_ab(n,a,b)",
            "expand_five"};
  }

}  // namespace tolrep
