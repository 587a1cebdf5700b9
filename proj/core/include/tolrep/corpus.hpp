// Named algebras and relations used throughout the test and acceptance
// suites. Element numbering is fixed per entry and recorded in
// CorpusEntry::element_names.
//
//   five_set        a b1 b2 b3 c              -> 0..4, no operations
//   s7_semilattice  a b1 b2 b3 b4 c 1         -> 0..6, binary "join"
//   l7_majority     a b1 b2 b3 b4 c 1         -> 0..6, ternary "f"
//   m3, n5          0 a b c 1                 -> 0..4, "join", "meet"
//   chain(k)        0 .. k-1                  -> "join" = max, "meet" = min
//   theta_ab(n,a,b) 0 .. n-1, no operations
//   expand_five     five_set plus the unary operations of expand()

#ifndef TOLREP_CORPUS_HPP_
#define TOLREP_CORPUS_HPP_

#include <map>          // for map
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "algebra.hpp"
#include "binrel.hpp"

namespace tolrep {

  struct CorpusEntry {
    std::string                   name;
    Algebra                       algebra;
    std::vector<std::string>      element_names;
    std::map<std::string, BinRel> relations;
    std::string                   notes;

    // Throws LookupError for unknown relation names.
    BinRel const& relation(std::string_view rel) const;
  };

  namespace corpus {
    // Set with five elements; "theta" relates a and c to each b_i and
    // nothing else, so it is not transitive.
    CorpusEntry five_set();
    // Six pairwise incomparable elements below a top; "theta" relates the
    // top to everything, a and c to each b_i; "leq" is the join order.
    CorpusEntry s7_semilattice();
    // Atoms and top of the lattice with six atoms, with the majority
    // operation f(x, y, z) = (x + y)(x + z)(y + z); carries the same "theta".
    CorpusEntry l7_majority();
    CorpusEntry m3();
    // 0 < a < b < 1 and 0 < c < 1.
    CorpusEntry n5();
    CorpusEntry chain(std::size_t k);
    // "theta" is everything except (a, b) and (b, a); "R" represents it.
    CorpusEntry theta_ab(std::size_t n, element a, element b);
    CorpusEntry expand_five();
  }  // namespace corpus

  // Accepts the plain names above and the parameterized forms "chain(4)"
  // and "theta_ab(5,0,1)". Throws LookupError for unknown names and
  // ArgumentError for bad parameters.
  CorpusEntry corpus_get(std::string_view name);

  std::vector<std::string> corpus_names();

}  // namespace tolrep

#endif  // TOLREP_CORPUS_HPP_
