#include "oracle.hpp"

#include <stdexcept>  // for runtime_error

namespace tolrep::oracle {

  PairSet to_set(BinRel const& r) {
    PairSet out;
    for (element a = 0; a < r.size(); ++a) {
      for (element b = 0; b < r.size(); ++b) {
        if (r.contains(a, b)) {
          out.emplace(a, b);
        }
      }
    }
    return out;
  }

  BinRel to_binrel(std::size_t n, PairSet const& s) {
    BinRel r(n);
    for (auto [a, b] : s) {
      r.insert(a, b);
    }
    return r;
  }

  PairSet diagonal(std::size_t n) {
    PairSet out;
    for (element a = 0; a < n; ++a) {
      out.emplace(a, a);
    }
    return out;
  }

  PairSet compose(PairSet const& r, PairSet const& s) {
    PairSet out;
    for (auto [a, c] : r) {
      for (auto [c2, b] : s) {
        if (c == c2) {
          out.emplace(a, b);
        }
      }
    }
    return out;
  }

  PairSet converse(PairSet const& r) {
    PairSet out;
    for (auto [a, b] : r) {
      out.emplace(b, a);
    }
    return out;
  }

  PairSet intersect(PairSet const& r, PairSet const& s) {
    PairSet out;
    for (auto const& p : r) {
      if (s.count(p) != 0) {
        out.insert(p);
      }
    }
    return out;
  }

  bool includes(PairSet const& big, PairSet const& small) {
    for (auto const& p : small) {
      if (big.count(p) == 0) {
        return false;
      }
    }
    return true;
  }

  bool reflexive(std::size_t n, PairSet const& r) {
    return includes(r, diagonal(n));
  }

  bool symmetric(PairSet const& r) {
    return r == converse(r);
  }

  bool transitive(PairSet const& r) {
    return includes(r, compose(r, r));
  }

  namespace {
    // Calls f(lhs_args, rhs_args) for every k-tuple of pairs from r.
    template <typename F>
    bool all_tuples(std::vector<Pair> const& pairs, std::size_t k, F&& f) {
      std::vector<element> lhs, rhs;
      auto rec = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == k) {
          return f(lhs, rhs);
        }
        for (auto const& [a, b] : pairs) {
          lhs.push_back(a);
          rhs.push_back(b);
          bool const keep_going = self(self, depth + 1);
          lhs.pop_back();
          rhs.pop_back();
          if (!keep_going) {
            return false;
          }
        }
        return true;
      };
      return rec(rec, 0);
    }
  }  // namespace

  bool compatible(Algebra const& alg, PairSet const& r) {
    std::vector<Pair> const pairs(r.begin(), r.end());
    for (auto const& op : alg.operations()) {
      bool const ok = all_tuples(
          pairs, op.arity(), [&](auto const& lhs, auto const& rhs) {
            return r.count({op(lhs), op(rhs)}) != 0;
          });
      if (!ok) {
        return false;
      }
    }
    return true;
  }

  PairSet closure(Algebra const& alg, PairSet seed, bool symmetric) {
    PairSet r = diagonal(alg.size());
    r.insert(seed.begin(), seed.end());
    while (true) {
      PairSet next = r;
      if (symmetric) {
        for (auto [a, b] : r) {
          next.emplace(b, a);
        }
      }
      std::vector<Pair> const pairs(r.begin(), r.end());
      for (auto const& op : alg.operations()) {
        all_tuples(pairs, op.arity(), [&](auto const& lhs, auto const& rhs) {
          next.emplace(op(lhs), op(rhs));
          return true;
        });
      }
      if (next == r) {
        return r;
      }
      r = std::move(next);
    }
  }

  std::vector<PairSet> tolerances(Algebra const& alg) {
    std::size_t const n = alg.size();
    std::vector<Pair> upper;
    for (element a = 0; a < n; ++a) {
      for (element b = a + 1; b < n; ++b) {
        upper.emplace_back(a, b);
      }
    }
    if (upper.size() > 20) {
      throw std::runtime_error("oracle::tolerances: universe too large");
    }
    std::vector<PairSet> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << upper.size());
         ++mask) {
      PairSet r = diagonal(n);
      for (std::size_t i = 0; i < upper.size(); ++i) {
        if ((mask >> i) & 1u) {
          r.emplace(upper[i].first, upper[i].second);
          r.emplace(upper[i].second, upper[i].first);
        }
      }
      if (compatible(alg, r)) {
        out.push_back(std::move(r));
      }
    }
    return out;
  }

  std::optional<PairSet> representation(Algebra const& alg,
                                        PairSet const& theta) {
    std::vector<Pair> off;
    for (auto [a, b] : theta) {
      if (a != b) {
        off.emplace_back(a, b);
      }
    }
    if (off.size() > 24) {
      throw std::runtime_error("oracle::representation: theta too large");
    }
    for (std::size_t mask = 0; mask < (std::size_t(1) << off.size());
         ++mask) {
      PairSet r = diagonal(alg.size());
      for (std::size_t i = 0; i < off.size(); ++i) {
        if ((mask >> i) & 1u) {
          r.insert(off[i]);
        }
      }
      if (compose(r, converse(r)) == theta && compatible(alg, r)) {
        return r;
      }
    }
    return std::nullopt;
  }

  PairSet eval_term(RelTerm const&                        t,
                    std::map<std::string, PairSet> const& env) {
    switch (t.kind()) {
      case RelTerm::Kind::variable:
        return env.at(t.name());
      case RelTerm::Kind::compose:
        return compose(eval_term(t.left(), env), eval_term(t.right(), env));
      case RelTerm::Kind::intersect:
        return intersect(eval_term(t.left(), env), eval_term(t.right(), env));
    }
    throw std::runtime_error("oracle::eval_term: corrupt term");
  }

}  // namespace tolrep::oracle
