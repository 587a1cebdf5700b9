#include "tolrep/algebra.hpp"

#include <algorithm>      // for any_of, all_of
#include <set>            // for set
#include <unordered_set>  // for unordered_set

#include "tolrep/errors.hpp"

namespace tolrep {

  namespace {
    std::size_t checked_power(std::size_t n, std::size_t k) {
      std::size_t out = 1;
      for (std::size_t i = 0; i < k; ++i) {
        if (out > (std::size_t(1) << 32) / n) {
          throw ArgumentError("operation table of size " + std::to_string(n)
                              + "^" + std::to_string(k) + " is too large");
        }
        out *= n;
      }
      return out;
    }

    void check_dimension(Algebra const& alg, BinRel const& r) {
      if (alg.size() != r.size()) {
        throw DimensionError("relation on " + std::to_string(r.size())
                             + " elements used with algebra of size "
                             + std::to_string(alg.size()));
      }
    }

    // Calls f(lhs_index, rhs_index) for every tuple of pairs drawn from
    // pairs[0, limit) in all positions except `fixed_pos`, which holds
    // `fixed`. Indices are flat table indices of the two argument tuples.
    template <typename F>
    void for_each_tuple(std::size_t              arity,
                        std::size_t              n,
                        std::vector<Pair> const& pairs,
                        std::size_t              limit,
                        std::size_t              fixed_pos,
                        Pair                     fixed,
                        F&&                      f) {
      std::vector<std::size_t> idx(arity, 0);
      std::vector<std::size_t> stride(arity, 1);
      for (std::size_t j = arity - 1; j-- > 0;) {
        stride[j] = stride[j + 1] * n;
      }
      std::size_t const fixed_lhs = fixed.first * stride[fixed_pos];
      std::size_t const fixed_rhs = fixed.second * stride[fixed_pos];
      if (limit == 0 && arity > 1) {
        return;
      }
      while (true) {
        std::size_t lhs = fixed_lhs, rhs = fixed_rhs;
        for (std::size_t j = 0; j < arity; ++j) {
          if (j != fixed_pos) {
            lhs += pairs[idx[j]].first * stride[j];
            rhs += pairs[idx[j]].second * stride[j];
          }
        }
        if (!f(lhs, rhs)) {
          return;
        }
        // advance the odometer, skipping the fixed position
        std::size_t j = arity;
        while (j-- > 0) {
          if (j == fixed_pos) {
            continue;
          }
          if (++idx[j] < limit) {
            break;
          }
          idx[j] = 0;
        }
        if (j == std::size_t(-1)) {
          return;
        }
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // OperationTable
  ////////////////////////////////////////////////////////////////////////

  OperationTable::OperationTable(std::string          name,
                                 std::size_t          arity,
                                 std::size_t          n,
                                 std::vector<element> table)
      : _name(std::move(name)), _arity(arity), _n(n), _table(std::move(table)) {
    if (_name.empty()) {
      throw ArgumentError("operation name must be nonempty");
    }
    if (n == 0 || n > BinRel::max_size) {
      throw ArgumentError("operation " + _name + ": bad universe size "
                          + std::to_string(n));
    }
    std::size_t const expected = checked_power(n, arity);
    if (_table.size() != expected) {
      throw ArgumentError("operation " + _name + " of arity "
                          + std::to_string(arity) + " expects "
                          + std::to_string(expected) + " entries, got "
                          + std::to_string(_table.size()));
    }
    for (std::size_t i = 0; i < _table.size(); ++i) {
      if (_table[i] >= n) {
        throw ArgumentError("operation " + _name + ": entry "
                            + std::to_string(i) + " = "
                            + std::to_string(_table[i])
                            + " lies outside the universe");
      }
    }
  }

  element OperationTable::operator()(std::span<element const> args) const {
    if (args.size() != _arity) {
      throw ArgumentError("operation " + _name + " has arity "
                          + std::to_string(_arity) + ", called with "
                          + std::to_string(args.size()) + " arguments");
    }
    std::size_t index = 0;
    for (auto a : args) {
      if (a >= _n) {
        throw ArgumentError("operation " + _name + ": argument "
                            + std::to_string(a) + " out of range");
      }
      index = index * _n + a;
    }
    return _table[index];
  }

  ////////////////////////////////////////////////////////////////////////
  // Algebra
  ////////////////////////////////////////////////////////////////////////

  Algebra::Algebra(std::size_t n, std::vector<OperationTable> ops)
      : _n(n), _ops(std::move(ops)) {
    if (n == 0 || n > BinRel::max_size) {
      throw ArgumentError("universe size must be in [1, "
                          + std::to_string(BinRel::max_size) + "], got "
                          + std::to_string(n));
    }
    std::unordered_set<std::string> seen;
    for (auto const& op : _ops) {
      if (op.universe_size() != n) {
        throw DimensionError("operation " + op.name() + " is defined on "
                             + std::to_string(op.universe_size())
                             + " elements, algebra has "
                             + std::to_string(n));
      }
      if (!seen.insert(op.name()).second) {
        throw ArgumentError("duplicate operation name " + op.name());
      }
    }
  }

  OperationTable const* Algebra::find(std::string_view name) const noexcept {
    for (auto const& op : _ops) {
      if (op.name() == name) {
        return &op;
      }
    }
    return nullptr;
  }

  OperationTable const& Algebra::operation(std::string_view name) const {
    auto const* op = find(name);
    if (op == nullptr) {
      throw LookupError("unknown operation " + std::string(name));
    }
    return *op;
  }

  bool Algebra::has_no_proper_operations() const noexcept {
    return std::all_of(_ops.cbegin(), _ops.cend(), [](auto const& op) {
      return op.arity() == 0;
    });
  }

  element eval_op(Algebra const&           alg,
                  std::string_view         op,
                  std::span<element const> args) {
    return alg.operation(op)(args);
  }

  ////////////////////////////////////////////////////////////////////////
  // Compatibility and closure
  ////////////////////////////////////////////////////////////////////////

  bool is_compatible(Algebra const& alg, BinRel const& r) {
    check_dimension(alg, r);
    auto const pairs = r.pairs();
    for (auto const& op : alg.operations()) {
      std::size_t const k = op.arity();
      if (k == 0) {
        // (c, c) must lie in r
        if (!r.test(op.at_index(0), op.at_index(0))) {
          return false;
        }
        continue;
      }
      if (pairs.empty()) {
        continue;
      }
      // Plain odometer over all k-tuples of pairs.
      std::vector<std::size_t> idx(k, 0);
      while (true) {
        std::size_t lhs = 0, rhs = 0;
        for (std::size_t j = 0; j < k; ++j) {
          lhs = lhs * alg.size() + pairs[idx[j]].first;
          rhs = rhs * alg.size() + pairs[idx[j]].second;
        }
        if (!r.test(op.at_index(lhs), op.at_index(rhs))) {
          return false;
        }
        std::size_t j = k;
        while (j-- > 0) {
          if (++idx[j] < pairs.size()) {
            break;
          }
          idx[j] = 0;
        }
        if (j == std::size_t(-1)) {
          break;
        }
      }
    }
    return true;
  }

  BinRel extend_closure(Algebra const&        alg,
                        BinRel                rel,
                        std::span<Pair const> added,
                        ClosureMode           mode) {
    check_dimension(alg, rel);
    bool const symmetric = mode == ClosureMode::reflexive_symmetric;

    std::vector<Pair> members = rel.pairs();
    std::vector<Pair> work;

    auto add = [&](element a, element b) {
      if (!rel.test(a, b)) {
        rel.insert(a, b);
        members.emplace_back(a, b);
        work.emplace_back(a, b);
      }
      if (symmetric && !rel.test(b, a)) {
        rel.insert(b, a);
        members.emplace_back(b, a);
        work.emplace_back(b, a);
      }
    };

    for (auto [a, b] : added) {
      if (a >= alg.size() || b >= alg.size()) {
        throw ArgumentError("pair (" + std::to_string(a) + ","
                            + std::to_string(b)
                            + ") out of range for universe of size "
                            + std::to_string(alg.size()));
      }
      add(a, b);
    }

    // Every tuple of pairs from the final relation is visited when its
    // last-processed member is processed.
    for (std::size_t head = 0; head < work.size(); ++head) {
      Pair const p = work[head];
      for (auto const& op : alg.operations()) {
        std::size_t const k = op.arity();
        if (k == 0) {
          continue;
        }
        if (k == 1) {
          add(op.at_index(p.first), op.at_index(p.second));
          continue;
        }
        for (std::size_t pos = 0; pos < k; ++pos) {
          std::size_t const limit = members.size();
          for_each_tuple(k,
                         alg.size(),
                         members,
                         limit,
                         pos,
                         p,
                         [&](std::size_t lhs, std::size_t rhs) {
                           add(op.at_index(lhs), op.at_index(rhs));
                           return true;
                         });
        }
      }
    }
    return rel;
  }

  BinRel closure(Algebra const&        alg,
                 std::span<Pair const> seed,
                 ClosureMode           mode) {
    // The diagonal is preserved by every operation.
    return extend_closure(alg, BinRel::diagonal(alg.size()), seed, mode);
  }

  RelationKind classify_relation(Algebra const& alg, BinRel const& r) {
    check_dimension(alg, r);
    Shape const shape      = classify_shape(r);
    bool const  admissible = shape.reflexive && is_compatible(alg, r);
    bool const  tolerance  = admissible && shape.symmetric;
    return {tolerance, tolerance && shape.transitive, admissible};
  }

  ////////////////////////////////////////////////////////////////////////
  // Unary expansion
  ////////////////////////////////////////////////////////////////////////

  Algebra expand(Algebra const& alg, BinRel const& theta, ExpansionStats* stats) {
    check_dimension(alg, theta);
    if (!classify_relation(alg, theta).tolerance) {
      throw PreconditionError("expand: relation is not a tolerance");
    }
    std::size_t const n = alg.size();
    if (n > 20) {
      throw ResourceError("expand: 2^" + std::to_string(n)
                          + " functions per pair is too many");
    }

    ExpansionStats                 local;
    std::set<std::vector<element>> seen;
    std::vector<OperationTable>    ops = alg.operations();

    auto fresh_name = [&](std::string base) {
      auto taken = [&](std::string const& name) {
        return std::any_of(ops.cbegin(), ops.cend(), [&](auto const& op) {
          return op.name() == name;
        });
      };
      while (taken(base)) {
        base += '_';
      }
      return base;
    };

    for (element a = 0; a < n; ++a) {
      for (element b = a; b < n; ++b) {
        if (!theta.test(a, b)) {
          continue;
        }
        if (a == b) {
          ++local.generated_constants;
          std::vector<element> table(n, a);
          if (seen.insert(table).second) {
            ops.emplace_back(
                fresh_name("k" + std::to_string(a)), 1, n, std::move(table));
          }
          continue;
        }
        ++local.off_diagonal_pairs;
        for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
          ++local.generated_off_diagonal;
          std::vector<element> table(n);
          for (element x = 0; x < n; ++x) {
            table[x] = ((mask >> x) & 1u) ? b : a;
          }
          if (seen.insert(table).second) {
            ops.emplace_back(fresh_name("u" + std::to_string(a) + "_"
                                        + std::to_string(b) + "_"
                                        + std::to_string(mask)),
                             1,
                             n,
                             std::move(table));
          }
        }
      }
    }
    local.distinct = seen.size();
    if (stats != nullptr) {
      *stats = local;
    }
    return Algebra(n, std::move(ops));
  }

}  // namespace tolrep
