// The end-to-end acceptance suite: every worked example and counterexample
// about representable tolerances, re-derived and cross-checked against the
// brute-force oracle. Shared by the acceptance test binary and the
// `verify-paper` command.

#ifndef TOLREP_TOOLS_ACCEPTANCE_HPP_
#define TOLREP_TOOLS_ACCEPTANCE_HPP_

#include <cstdint>  // for uint64_t
#include <iosfwd>   // for ostream
#include <string>   // for string
#include <vector>   // for vector

namespace tolrep::acceptance {

  // Seed of the random algebras, congruence pairs and terms.
  inline constexpr std::uint64_t random_seed = 20241016;

  struct CriterionResult {
    int         id;
    std::string title;
    bool        passed;
    std::string detail;
    double      seconds;
  };

  std::string format(CriterionResult const& r);

  // Runs every criterion in order; if out is non-null, writes one line per
  // criterion as soon as it finishes.
  std::vector<CriterionResult> run_all(std::ostream* out);

}  // namespace tolrep::acceptance

#endif  // TOLREP_TOOLS_ACCEPTANCE_HPP_
