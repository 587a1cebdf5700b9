// Brute-force reference implementations used to cross-check the library.
//
// Relations are std::set<Pair>, operations are evaluated one tuple at a
// time through OperationTable::operator(), closures are computed by
// rescanning until nothing changes, and representability is decided by
// trying every reflexive subset of theta. Nothing here calls the bit-row
// relation algebra or the closure/search code in tolrep_core.

#ifndef TOLREP_ORACLE_HPP_
#define TOLREP_ORACLE_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <set>       // for set
#include <string>    // for string
#include <vector>    // for vector

#include "tolrep/algebra.hpp"
#include "tolrep/binrel.hpp"
#include "tolrep/relterms.hpp"

namespace tolrep::oracle {

  using PairSet = std::set<Pair>;

  PairSet to_set(BinRel const& r);
  BinRel  to_binrel(std::size_t n, PairSet const& s);

  PairSet diagonal(std::size_t n);
  PairSet compose(PairSet const& r, PairSet const& s);
  PairSet converse(PairSet const& r);
  PairSet intersect(PairSet const& r, PairSet const& s);
  bool    includes(PairSet const& big, PairSet const& small);

  bool reflexive(std::size_t n, PairSet const& r);
  bool symmetric(PairSet const& r);
  bool transitive(PairSet const& r);

  // Tuple-by-tuple evaluation of every operation on every tuple of pairs.
  bool compatible(Algebra const& alg, PairSet const& r);

  // Rescan-until-stable fixpoint.
  PairSet closure(Algebra const& alg, PairSet seed, bool symmetric);

  // Every reflexive symmetric relation on n points that alg preserves.
  std::vector<PairSet> tolerances(Algebra const& alg);

  // First reflexive subset R of theta (subsets in increasing bitmask order
  // of theta's off-diagonal pairs) with R compatible and R o R^- = theta.
  std::optional<PairSet> representation(Algebra const& alg,
                                        PairSet const& theta);

  PairSet eval_term(RelTerm const&                        t,
                    std::map<std::string, PairSet> const& env);

}  // namespace tolrep::oracle

#endif  // TOLREP_ORACLE_HPP_
