// Dense binary relations on a finite universe {0, ..., n - 1}.
//
// A BinRel stores one 64-bit row per element; bit b of row a is set iff the
// ordered pair (a, b) belongs to the relation. Universes are therefore
// limited to BinRel::max_size elements, which is far beyond what exhaustive
// search over relations can handle anyway.

#ifndef TOLREP_BINREL_HPP_
#define TOLREP_BINREL_HPP_

#include <cstddef>     // for size_t
#include <cstdint>     // for uint32_t, uint64_t
#include <functional>  // for hash
#include <span>        // for span
#include <string>      // for string
#include <utility>     // for pair
#include <vector>      // for vector

namespace tolrep {

  using element = std::uint32_t;
  using Pair    = std::pair<element, element>;

  class BinRel {
   public:
    using row_type                        = std::uint64_t;
    static constexpr std::size_t max_size = 64;

    // The empty relation on n elements. Throws ArgumentError unless
    // 0 < n <= max_size.
    explicit BinRel(std::size_t n);

    static BinRel diagonal(std::size_t n);
    static BinRel full(std::size_t n);
    static BinRel from_pairs(std::size_t n, std::span<Pair const> pairs);
    // Same as from_pairs followed by adding the diagonal.
    static BinRel reflexive_from_pairs(std::size_t n,
                                       std::span<Pair const> pairs);

    std::size_t size() const noexcept {
      return _n;
    }

    // Checked membership; throws ArgumentError for out-of-range elements.
    bool contains(element a, element b) const;
    // Unchecked membership.
    bool test(element a, element b) const noexcept {
      return (_rows[a] >> b) & 1u;
    }

    void insert(element a, element b);
    void erase(element a, element b);

    row_type row(element a) const noexcept {
      return _rows[a];
    }
    void set_row(element a, row_type bits) noexcept {
      _rows[a] = bits & universe_mask();
    }

    row_type universe_mask() const noexcept {
      return _n == 64 ? ~row_type(0) : (row_type(1) << _n) - 1;
    }

    // Number of ordered pairs in the relation.
    std::size_t count() const noexcept;
    // Pairs in lexicographic order.
    std::vector<Pair> pairs() const;
    // Pairs (a, b) with a != b, lexicographic order.
    std::vector<Pair> off_diagonal_pairs() const;

    bool empty() const noexcept;

    bool operator==(BinRel const&) const = default;

    std::size_t hash() const noexcept;

   private:
    std::size_t           _n;
    std::vector<row_type> _rows;
  };

  // (a, b) is in compose(r, s) iff (a, c) in r and (c, b) in s for some c.
  BinRel compose(BinRel const& r, BinRel const& s);
  BinRel converse(BinRel const& r);
  BinRel intersect(BinRel const& r, BinRel const& s);
  BinRel unite(BinRel const& r, BinRel const& s);
  bool   is_subset(BinRel const& r, BinRel const& s);

  struct Shape {
    bool reflexive;
    bool symmetric;
    bool transitive;

    bool operator==(Shape const&) const = default;
  };

  Shape classify_shape(BinRel const& r);

  bool is_reflexive(BinRel const& r);
  bool is_symmetric(BinRel const& r);
  bool is_transitive(BinRel const& r);

  // Off-diagonal pairs only, e.g. "{(0,1), (1,0)}"; the diagonal is written
  // as a prefix "D+" when fully present.
  std::string to_string(BinRel const& r);

}  // namespace tolrep

template <>
struct std::hash<tolrep::BinRel> {
  std::size_t operator()(tolrep::BinRel const& r) const noexcept {
    return r.hash();
  }
};

#endif  // TOLREP_BINREL_HPP_
