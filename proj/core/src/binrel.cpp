#include "tolrep/binrel.hpp"

#include <bit>      // for popcount
#include <sstream>  // for ostringstream

#include "tolrep/errors.hpp"

namespace tolrep {

  namespace {
    void check_same_size(BinRel const& r, BinRel const& s, char const* op) {
      if (r.size() != s.size()) {
        throw DimensionError(std::string(op) + ": relations on "
                             + std::to_string(r.size()) + " and "
                             + std::to_string(s.size()) + " elements");
      }
    }

    void check_element(BinRel const& r, element a) {
      if (a >= r.size()) {
        throw ArgumentError("element " + std::to_string(a)
                            + " out of range for universe of size "
                            + std::to_string(r.size()));
      }
    }
  }  // namespace

  BinRel::BinRel(std::size_t n) : _n(n), _rows() {
    if (n == 0 || n > max_size) {
      throw ArgumentError("universe size must be in [1, "
                          + std::to_string(max_size) + "], got "
                          + std::to_string(n));
    }
    _rows.assign(n, 0);
  }

  BinRel BinRel::diagonal(std::size_t n) {
    BinRel r(n);
    for (element a = 0; a < n; ++a) {
      r._rows[a] = row_type(1) << a;
    }
    return r;
  }

  BinRel BinRel::full(std::size_t n) {
    BinRel r(n);
    for (auto& row : r._rows) {
      row = r.universe_mask();
    }
    return r;
  }

  BinRel BinRel::from_pairs(std::size_t n, std::span<Pair const> pairs) {
    BinRel r(n);
    for (auto [a, b] : pairs) {
      r.insert(a, b);
    }
    return r;
  }

  BinRel BinRel::reflexive_from_pairs(std::size_t n,
                                      std::span<Pair const> pairs) {
    BinRel r = diagonal(n);
    for (auto [a, b] : pairs) {
      r.insert(a, b);
    }
    return r;
  }

  bool BinRel::contains(element a, element b) const {
    check_element(*this, a);
    check_element(*this, b);
    return test(a, b);
  }

  void BinRel::insert(element a, element b) {
    check_element(*this, a);
    check_element(*this, b);
    _rows[a] |= row_type(1) << b;
  }

  void BinRel::erase(element a, element b) {
    check_element(*this, a);
    check_element(*this, b);
    _rows[a] &= ~(row_type(1) << b);
  }

  std::size_t BinRel::count() const noexcept {
    std::size_t total = 0;
    for (auto row : _rows) {
      total += std::popcount(row);
    }
    return total;
  }

  std::vector<Pair> BinRel::pairs() const {
    std::vector<Pair> out;
    out.reserve(count());
    for (element a = 0; a < _n; ++a) {
      for (element b = 0; b < _n; ++b) {
        if (test(a, b)) {
          out.emplace_back(a, b);
        }
      }
    }
    return out;
  }

  std::vector<Pair> BinRel::off_diagonal_pairs() const {
    std::vector<Pair> out;
    for (element a = 0; a < _n; ++a) {
      for (element b = 0; b < _n; ++b) {
        if (a != b && test(a, b)) {
          out.emplace_back(a, b);
        }
      }
    }
    return out;
  }

  bool BinRel::empty() const noexcept {
    for (auto row : _rows) {
      if (row != 0) {
        return false;
      }
    }
    return true;
  }

  std::size_t BinRel::hash() const noexcept {
    // FNV-1a over the rows.
    std::size_t h = 1469598103934665603ull ^ _n;
    for (auto row : _rows) {
      h ^= static_cast<std::size_t>(row);
      h *= 1099511628211ull;
    }
    return h;
  }

  BinRel compose(BinRel const& r, BinRel const& s) {
    check_same_size(r, s, "compose");
    std::size_t const n = r.size();
    BinRel            out(n);
    for (element a = 0; a < n; ++a) {
      BinRel::row_type acc = 0;
      BinRel::row_type mid = r.row(a);
      while (mid != 0) {
        element c = static_cast<element>(std::countr_zero(mid));
        mid &= mid - 1;
        acc |= s.row(c);
      }
      out.set_row(a, acc);
    }
    return out;
  }

  BinRel converse(BinRel const& r) {
    std::size_t const n = r.size();
    BinRel            out(n);
    for (element a = 0; a < n; ++a) {
      BinRel::row_type row = r.row(a);
      while (row != 0) {
        element b = static_cast<element>(std::countr_zero(row));
        row &= row - 1;
        out.set_row(b, out.row(b) | (BinRel::row_type(1) << a));
      }
    }
    return out;
  }

  BinRel intersect(BinRel const& r, BinRel const& s) {
    check_same_size(r, s, "intersect");
    BinRel out(r.size());
    for (element a = 0; a < r.size(); ++a) {
      out.set_row(a, r.row(a) & s.row(a));
    }
    return out;
  }

  BinRel unite(BinRel const& r, BinRel const& s) {
    check_same_size(r, s, "unite");
    BinRel out(r.size());
    for (element a = 0; a < r.size(); ++a) {
      out.set_row(a, r.row(a) | s.row(a));
    }
    return out;
  }

  bool is_subset(BinRel const& r, BinRel const& s) {
    check_same_size(r, s, "is_subset");
    for (element a = 0; a < r.size(); ++a) {
      if ((r.row(a) & ~s.row(a)) != 0) {
        return false;
      }
    }
    return true;
  }

  bool is_reflexive(BinRel const& r) {
    for (element a = 0; a < r.size(); ++a) {
      if (!r.test(a, a)) {
        return false;
      }
    }
    return true;
  }

  bool is_symmetric(BinRel const& r) {
    return r == converse(r);
  }

  bool is_transitive(BinRel const& r) {
    return is_subset(compose(r, r), r);
  }

  Shape classify_shape(BinRel const& r) {
    return {is_reflexive(r), is_symmetric(r), is_transitive(r)};
  }

  std::string to_string(BinRel const& r) {
    std::ostringstream os;
    bool const         refl = is_reflexive(r);
    if (refl) {
      os << "D+";
    }
    os << '{';
    bool first = true;
    for (auto [a, b] : r.pairs()) {
      if (refl && a == b) {
        continue;
      }
      if (!first) {
        os << ", ";
      }
      first = false;
      os << '(' << a << ',' << b << ')';
    }
    os << '}';
    return os.str();
  }

}  // namespace tolrep
