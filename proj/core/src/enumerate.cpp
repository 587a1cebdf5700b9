#include <deque>          // for deque
#include <unordered_set>  // for unordered_set

#include "tolrep/decide.hpp"
#include "tolrep/errors.hpp"

namespace tolrep {

  namespace {
    void require_tolerance(Algebra const&   alg,
                           BinRel const&    theta,
                           std::string_view where) {
      if (alg.size() != theta.size()) {
        throw DimensionError(std::string(where) + ": relation on "
                             + std::to_string(theta.size())
                             + " elements, algebra of size "
                             + std::to_string(alg.size()));
      }
      if (!classify_relation(alg, theta).tolerance) {
        throw PreconditionError(std::string(where)
                                + ": relation is not a tolerance");
      }
    }

    // The separator from the no-operation case: a and b are related only
    // to themselves, every other element is related to everything. Then
    // R o R^- is the full relation minus (a, b) and (b, a).
    BinRel pair_separator(std::size_t n, element a, element b) {
      BinRel r = BinRel::diagonal(n);
      for (element x = 0; x < n; ++x) {
        if (x != a && x != b) {
          r.set_row(x, r.universe_mask());
        }
      }
      return r;
    }

    // Breadth-first walk over closed reflexive relations. `discover` is
    // called once per new relation in discovery order and returns false to
    // stop the walk; `expand` decides at dequeue time whether to generate
    // the relation's one-pair extensions. Returns false if stopped.
    template <typename Discover, typename Expand>
    bool walk_admissible(Algebra const& alg, Discover&& discover, Expand&& expand) {
      std::unordered_set<BinRel> seen;
      std::deque<BinRel>         queue;
      std::size_t const          n = alg.size();

      auto offer = [&](BinRel r) {
        if (!seen.insert(r).second) {
          return true;
        }
        if (!discover(r)) {
          return false;
        }
        queue.push_back(std::move(r));
        return true;
      };

      if (!offer(BinRel::diagonal(n))) {
        return false;
      }
      while (!queue.empty()) {
        BinRel r = std::move(queue.front());
        queue.pop_front();
        if (!expand(r)) {
          continue;
        }
        for (element a = 0; a < n; ++a) {
          for (element b = 0; b < n; ++b) {
            if (r.test(a, b)) {
              continue;
            }
            Pair const p(a, b);
            if (!offer(extend_closure(alg, r, {&p, 1}, ClosureMode::reflexive))) {
              return false;
            }
          }
        }
      }
      return true;
    }
  }  // namespace

  bool for_each_admissible(Algebra const&                            alg,
                           std::size_t                               limit,
                           std::function<void(BinRel const&)> const& visit) {
    if (limit == 0) {
      throw ArgumentError("enumerate_admissible: limit must be positive");
    }
    std::size_t found    = 0;
    bool        complete = walk_admissible(
        alg,
        [&](BinRel const& r) {
          if (++found > limit) {
            return false;
          }
          visit(r);
          return true;
        },
        [](BinRel const&) { return true; });
    return !complete;
  }

  AdmissibleEnumeration enumerate_admissible(Algebra const& alg,
                                             std::size_t    limit) {
    AdmissibleEnumeration out;
    out.truncated = for_each_admissible(
        alg, limit, [&](BinRel const& r) { out.relations.push_back(r); });
    return out;
  }

  std::optional<WeakRepWitness>
  find_weak_representation(Algebra const&       alg,
                           BinRel const&        theta,
                           SearchOptions const& opts) {
    require_tolerance(alg, theta, "find_weak_representation");
    std::size_t const n = alg.size();

    std::vector<Pair> outside;
    for (element a = 0; a < n; ++a) {
      for (element b = 0; b < n; ++b) {
        if (a != b && !theta.test(a, b)) {
          outside.emplace_back(a, b);
        }
      }
    }

    WeakRepWitness witness;
    if (outside.empty()) {
      return witness;
    }
    if (theta == BinRel::diagonal(n)) {
      for (auto p : outside) {
        witness.separators.emplace(p, theta);
      }
      return witness;
    }
    if (alg.has_no_proper_operations()) {
      for (auto [a, b] : outside) {
        witness.separators.emplace(Pair(a, b), pair_separator(n, a, b));
      }
      return witness;
    }

    // A factor R of any weak representation has theta inside R o R^-; the
    // family of per-pair separators is therefore complete. Supersets of a
    // relation whose R o R^- already contains every pending pair cannot
    // separate anything, so such relations are not extended.
    std::vector<Pair> pending = outside;
    std::size_t       visited = 0;
    walk_admissible(
        alg,
        [&](BinRel const& r) {
          if (++visited > opts.relation_budget) {
            throw ResourceError("find_weak_representation: relation budget "
                                "of "
                                + std::to_string(opts.relation_budget)
                                + " exceeded");
          }
          BinRel const rr = compose(r, converse(r));
          if (!is_subset(theta, rr)) {
            return true;
          }
          std::erase_if(pending, [&](Pair const& p) {
            if (rr.test(p.first, p.second)) {
              return false;
            }
            witness.separators.emplace(p, r);
            return true;
          });
          return !pending.empty();
        },
        [&](BinRel const& r) {
          BinRel const rr = compose(r, converse(r));
          for (auto [a, b] : pending) {
            if (!rr.test(a, b)) {
              return true;
            }
          }
          return false;
        });
    if (!pending.empty()) {
      return std::nullopt;
    }
    return witness;
  }

  std::vector<BinRel> enumerate_tolerances(Algebra const&       alg,
                                           SearchOptions const& opts) {
    std::size_t const n = alg.size();

    std::vector<BinRel>        principal;
    std::unordered_set<BinRel> seen_principal;
    for (element a = 0; a < n; ++a) {
      for (element b = a + 1; b < n; ++b) {
        Pair const p(a, b);
        BinRel t = closure(alg, {&p, 1}, ClosureMode::reflexive_symmetric);
        if (seen_principal.insert(t).second) {
          principal.push_back(std::move(t));
        }
      }
    }

    // Every tolerance is the join of the principal tolerances of its pairs.
    std::vector<BinRel>        out{BinRel::diagonal(n)};
    std::unordered_set<BinRel> seen{out.front()};
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (auto const& p : principal) {
        if (is_subset(p, out[i])) {
          continue;
        }
        auto const pairs = p.off_diagonal_pairs();
        BinRel     joined
            = extend_closure(alg, out[i], pairs, ClosureMode::reflexive_symmetric);
        if (seen.insert(joined).second) {
          out.push_back(std::move(joined));
          if (out.size() > opts.relation_budget) {
            throw ResourceError("enumerate_tolerances: more than "
                                + std::to_string(opts.relation_budget)
                                + " tolerances");
          }
        }
      }
    }
    return out;
  }

  std::vector<BinRel> enumerate_congruences(Algebra const&       alg,
                                            SearchOptions const& opts) {
    auto all = enumerate_tolerances(alg, opts);
    std::erase_if(all, [](BinRel const& t) { return !is_transitive(t); });
    return all;
  }

  BinRel tolerance_join(Algebra const& alg,
                        BinRel const&  alpha,
                        BinRel const&  beta) {
    require_tolerance(alg, alpha, "tolerance_join");
    require_tolerance(alg, beta, "tolerance_join");
    return extend_closure(
        alg, alpha, beta.off_diagonal_pairs(), ClosureMode::reflexive_symmetric);
  }

  PermutabilityReport check_permutability(Algebra const&       alg,
                                          SearchOptions const& opts) {
    auto const congruences = enumerate_congruences(alg, opts);
    for (std::size_t i = 0; i < congruences.size(); ++i) {
      for (std::size_t j = i + 1; j < congruences.size(); ++j) {
        auto const& alpha = congruences[i];
        auto const& beta  = congruences[j];
        BinRel const ab   = compose(alpha, beta);
        BinRel const ba   = compose(beta, alpha);
        if (ab == ba) {
          continue;
        }
        for (element x = 0; x < alg.size(); ++x) {
          for (element y = 0; y < alg.size(); ++y) {
            if (ab.test(x, y) && !ba.test(x, y)) {
              return {false, PermutabilityCounterexample{alpha, beta, {x, y}}};
            }
            if (ba.test(x, y) && !ab.test(x, y)) {
              return {false, PermutabilityCounterexample{beta, alpha, {x, y}}};
            }
          }
        }
      }
    }
    return {true, std::nullopt};
  }

}  // namespace tolrep
