#include <string>  // for string, to_string

#include "tolrep/decide.hpp"
#include "tolrep/errors.hpp"

namespace tolrep {

  namespace {
    std::string pair_string(element a, element b) {
      return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }

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

    // Backtracking over witnesses: theta = R o R^- means every theta-pair
    // (a, b) needs some c with (a, c), (b, c) in R. The search keeps R
    // closed under the operations, never leaves theta, and keeps a set of
    // pairs known to be absent from every solution extending the current
    // node.
    class RepresentationSearch {
     public:
      RepresentationSearch(Algebra const&       alg,
                           BinRel const&        theta,
                           SearchOptions const& opts)
          : _alg(alg), _theta(theta), _opts(opts), _nodes(0) {}

      std::optional<BinRel> run() {
        std::size_t const n = _alg.size();
        return solve(BinRel::diagonal(n), BinRel(n));
      }

      std::size_t nodes() const noexcept {
        return _nodes;
      }

     private:
      void notify(BinRel const& r, SearchEvent ev) const {
        if (_opts.observer) {
          _opts.observer(r, ev);
        }
      }

      // Middle elements c that may still cover (a, b). A necessary
      // condition only: (a, c), (b, c) stay inside theta and outside the
      // excluded set, and every x already related to c must be
      // theta-related to both a and b.
      std::vector<element> candidates(BinRel const& inverse,
                                      BinRel const& excluded,
                                      element       a,
                                      element       b) const {
        std::vector<element> out;
        auto const           both = _theta.row(a) & _theta.row(b);
        for (element c = 0; c < _alg.size(); ++c) {
          if (!((both >> c) & 1u) || excluded.test(a, c)
              || excluded.test(b, c)) {
            continue;
          }
          if ((inverse.row(c) & ~both) != 0) {
            continue;
          }
          out.push_back(c);
        }
        return out;
      }

      std::optional<BinRel> solve(BinRel const& r, BinRel excluded) {
        if (++_nodes > _opts.node_budget) {
          throw ResourceError("find_representation: node budget of "
                              + std::to_string(_opts.node_budget)
                              + " exceeded");
        }
        notify(r, SearchEvent::node);

        BinRel const inverse = converse(r);
        BinRel const covered = compose(r, inverse);
        if (covered == _theta) {
          notify(r, SearchEvent::solution);
          return r;
        }

        // fail-first: the uncovered pair with fewest candidate witnesses
        std::optional<Pair>  target;
        std::vector<element> best;
        for (element a = 0; a < _alg.size(); ++a) {
          for (element b = a + 1; b < _alg.size(); ++b) {
            if (!_theta.test(a, b) || covered.test(a, b)) {
              continue;
            }
            auto cands = candidates(inverse, excluded, a, b);
            if (cands.empty()) {
              return std::nullopt;
            }
            if (!target || cands.size() < best.size()) {
              target = Pair(a, b);
              best   = std::move(cands);
            }
          }
        }
        auto const [a, b] = *target;

        for (element c : best) {
          if (excluded.test(a, c) || excluded.test(b, c)) {
            continue;
          }
          std::vector<Pair> added;
          if (!r.test(a, c)) {
            added.emplace_back(a, c);
          }
          if (!r.test(b, c)) {
            added.emplace_back(b, c);
          }
          BinRel next
              = extend_closure(_alg, r, added, ClosureMode::reflexive);
          if (!intersect(next, excluded).empty()) {
            notify(next, SearchEvent::pruned_excluded);
          } else if (!is_subset(compose(next, converse(next)), _theta)) {
            // R o R^- only grows with R, so no superset can work either
            notify(next, SearchEvent::pruned_composition);
          } else if (auto found = solve(next, excluded)) {
            return found;
          }
          // A failed branch that added a single pair rules that pair out
          // for every remaining sibling.
          if (added.size() == 1) {
            excluded.insert(added[0].first, added[0].second);
          }
        }
        return std::nullopt;
      }

      Algebra const&       _alg;
      BinRel const&        _theta;
      SearchOptions const& _opts;
      std::size_t          _nodes;
    };
  }  // namespace

  Verdict verify_representation(Algebra const& alg,
                                BinRel const&  theta,
                                BinRel const&  r) {
    if (r.size() != alg.size() || theta.size() != alg.size()) {
      return {false, "dimension mismatch"};
    }
    if (!is_reflexive(r)) {
      return {false, "witness is not reflexive"};
    }
    if (!is_compatible(alg, r)) {
      return {false, "witness is not compatible"};
    }
    BinRel const rr = compose(r, converse(r));
    for (element a = 0; a < theta.size(); ++a) {
      for (element b = 0; b < theta.size(); ++b) {
        if (rr.test(a, b) != theta.test(a, b)) {
          return {false,
                  "R o R^- and theta differ at " + pair_string(a, b)};
        }
      }
    }
    return {true, ""};
  }

  Verdict verify_weak_representation(Algebra const&        alg,
                                     BinRel const&         theta,
                                     WeakRepWitness const& witness) {
    if (theta.size() != alg.size()) {
      return {false, "dimension mismatch"};
    }
    std::size_t const n    = alg.size();
    BinRel            meet = BinRel::full(n);
    for (auto const& [p, r] : witness.separators) {
      auto const [a, b] = p;
      std::string const where = "separator for " + pair_string(a, b);
      if (r.size() != n || a >= n || b >= n) {
        return {false, where + ": dimension mismatch"};
      }
      if (a == b || theta.test(a, b)) {
        return {false, where + ": pair is not outside theta"};
      }
      if (!is_reflexive(r)) {
        return {false, where + " is not reflexive"};
      }
      if (!is_compatible(alg, r)) {
        return {false, where + " is not compatible"};
      }
      BinRel const rr = compose(r, converse(r));
      if (!is_subset(theta, rr)) {
        return {false, where + ": R o R^- does not contain theta"};
      }
      if (rr.test(a, b)) {
        return {false, where + ": pair not excluded by R o R^-"};
      }
      meet = intersect(meet, rr);
    }
    if (meet != theta) {
      return {false, "intersection of the family differs from theta"};
    }
    return {true, ""};
  }

  std::optional<RepWitness> find_representation(Algebra const&       alg,
                                                BinRel const&        theta,
                                                SearchOptions const& opts,
                                                SearchStats*         stats) {
    require_tolerance(alg, theta, "find_representation");
    if (theta == BinRel::diagonal(alg.size())) {
      if (stats != nullptr) {
        stats->nodes = 0;
      }
      return RepWitness{theta};
    }
    RepresentationSearch search(alg, theta, opts);
    auto                 found = search.run();
    if (stats != nullptr) {
      stats->nodes = search.nodes();
    }
    if (!found) {
      return std::nullopt;
    }
    return RepWitness{std::move(*found)};
  }

  RepWitness represent_via_order(Algebra const&   alg,
                                 std::string_view join_name,
                                 std::string_view meet_name,
                                 BinRel const&    theta) {
    auto const& join = alg.operation(join_name);
    auto const& meet = alg.operation(meet_name);
    if (join.arity() != 2 || meet.arity() != 2) {
      throw PreconditionError("represent_via_order: join and meet must be "
                              "binary");
    }
    require_tolerance(alg, theta, "represent_via_order");

    std::size_t const n = alg.size();
    auto j = [&](element x, element y) { return join.at_index(x * n + y); };
    auto m = [&](element x, element y) { return meet.at_index(x * n + y); };

    for (element x = 0; x < n; ++x) {
      if (j(x, x) != x) {
        throw PreconditionError("join is not idempotent at "
                                + std::to_string(x));
      }
      for (element y = 0; y < n; ++y) {
        if (j(x, y) != j(y, x)) {
          throw PreconditionError("join is not commutative at "
                                  + pair_string(x, y));
        }
        for (element z = 0; z < n; ++z) {
          if (j(j(x, y), z) != j(x, j(y, z))) {
            throw PreconditionError(
                "join is not associative at (" + std::to_string(x) + ","
                + std::to_string(y) + "," + std::to_string(z) + ")");
          }
        }
        if (m(x, j(x, y)) != x) {
          throw PreconditionError("identity a ^ (a v b) = a fails at "
                                  + pair_string(x, y));
        }
        if (m(j(x, y), y) != y) {
          throw PreconditionError("identity (a v b) ^ b = b fails at "
                                  + pair_string(x, y));
        }
      }
    }

    BinRel leq(n);
    for (element x = 0; x < n; ++x) {
      for (element y = 0; y < n; ++y) {
        if (j(x, y) == y) {
          leq.insert(x, y);
        }
      }
    }
    if (!is_compatible(alg, leq)) {
      throw PreconditionError("the order induced by join is not compatible");
    }

    BinRel r = intersect(theta, leq);
    if (compose(r, converse(r)) != theta) {
      throw Error("represent_via_order: R o R^- differs from theta although "
                  "all preconditions hold");
    }
    return RepWitness{std::move(r)};
  }

}  // namespace tolrep
