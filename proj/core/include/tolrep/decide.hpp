// Decision procedures for representability of tolerances.
//
// A tolerance theta of a finite algebra is representable when
// theta = R o R^- for some reflexive compatible relation R, and weakly
// representable when it is an intersection of such relations R_k o R_k^-.
// On a finite universe a finite family always suffices: one separating
// relation for each pair outside theta.
//
// Every search is bounded by an explicit budget. Running out of budget
// throws ResourceError; a returned std::nullopt is always a proof of
// non-existence.

#ifndef TOLREP_DECIDE_HPP_
#define TOLREP_DECIDE_HPP_

#include <cstddef>     // for size_t
#include <functional>  // for function
#include <map>         // for map
#include <optional>    // for optional
#include <string>      // for string
#include <vector>      // for vector

#include "algebra.hpp"
#include "binrel.hpp"

namespace tolrep {

  inline constexpr std::size_t default_node_budget     = 1'000'000;
  inline constexpr std::size_t default_relation_budget = 100'000;

  enum class SearchEvent {
    // a closed candidate R with R o R^- inside theta, about to be expanded
    node,
    // the closure of a tentative extension has R o R^- outside theta
    pruned_composition,
    // the closure of a tentative extension hits a pair already ruled out
    pruned_excluded,
    solution
  };

  using SearchObserver = std::function<void(BinRel const&, SearchEvent)>;

  struct SearchOptions {
    std::size_t    node_budget     = default_node_budget;
    std::size_t    relation_budget = default_relation_budget;
    SearchObserver observer;
  };

  struct SearchStats {
    std::size_t nodes = 0;
  };

  struct RepWitness {
    BinRel relation;
  };

  // One separating relation per ordered pair (a, b), a != b, outside theta.
  struct WeakRepWitness {
    std::map<Pair, BinRel> separators;
  };

  struct PermutabilityCounterexample {
    BinRel alpha;
    BinRel beta;
    // lies in alpha o beta but not in beta o alpha
    Pair pair;
  };

  struct PermutabilityReport {
    bool                                       permutable;
    std::optional<PermutabilityCounterexample> counterexample;
  };

  struct Verdict {
    bool        ok;
    std::string reason;

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  // Checks that r is reflexive, compatible with alg (by direct tuple
  // enumeration), and that r o r^- equals theta.
  Verdict verify_representation(Algebra const& alg,
                                BinRel const&  theta,
                                BinRel const&  r);

  // Checks every separator, and that the intersection of the family of
  // R o R^- equals theta.
  Verdict verify_weak_representation(Algebra const&        alg,
                                     BinRel const&         theta,
                                     WeakRepWitness const& witness);

  // Complete backtracking search for R with theta = R o R^-, confined to
  // R inside theta. Deterministic; returns the first witness in ascending
  // order of (pair, middle element) choices.
  std::optional<RepWitness> find_representation(Algebra const&       alg,
                                                BinRel const&        theta,
                                                SearchOptions const& opts = {},
                                                SearchStats* stats = nullptr);

  // R = theta meet the order induced by `join`, for algebras with a join
  // and a meet satisfying a ^ (a v b) = a and (a v b) ^ b = b whose join
  // order is compatible. Every precondition is checked and reported with a
  // witness on failure (PreconditionError).
  RepWitness represent_via_order(Algebra const&   alg,
                                 std::string_view join,
                                 std::string_view meet,
                                 BinRel const&    theta);

  struct AdmissibleEnumeration {
    std::vector<BinRel> relations;
    bool                truncated = false;
  };

  // Breadth-first enumeration of the reflexive compatible relations,
  // starting from the diagonal and adding one absent pair at a time.
  // Stops after `limit` relations; `truncated` is set iff more exist.
  AdmissibleEnumeration enumerate_admissible(Algebra const& alg,
                                             std::size_t    limit);

  // Streaming form: calls visit for each relation in the same order.
  // Returns true if the enumeration was truncated.
  bool for_each_admissible(Algebra const&                       alg,
                           std::size_t                          limit,
                           std::function<void(BinRel const&)> const& visit);

  std::optional<WeakRepWitness>
  find_weak_representation(Algebra const&       alg,
                           BinRel const&        theta,
                           SearchOptions const& opts = {});

  // All tolerances, as joins of principal tolerances. Throws ResourceError
  // past opts.relation_budget tolerances.
  std::vector<BinRel> enumerate_tolerances(Algebra const&       alg,
                                           SearchOptions const& opts = {});

  std::vector<BinRel> enumerate_congruences(Algebra const&       alg,
                                            SearchOptions const& opts = {});

  // Smallest tolerance containing alpha and beta.
  BinRel tolerance_join(Algebra const& alg,
                        BinRel const&  alpha,
                        BinRel const&  beta);

  PermutabilityReport check_permutability(Algebra const&       alg,
                                          SearchOptions const& opts = {});

}  // namespace tolrep

#endif  // TOLREP_DECIDE_HPP_
