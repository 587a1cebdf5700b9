// Finite algebras given by operation tables.

#ifndef TOLREP_ALGEBRA_HPP_
#define TOLREP_ALGEBRA_HPP_

#include <cstddef>      // for size_t
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "binrel.hpp"

namespace tolrep {

  // An operation of arity k on {0, ..., n - 1}. The table has n^k entries;
  // the entry for (a_1, ..., a_k) sits at a_1 n^(k-1) + ... + a_k, so the
  // first argument is the most significant digit.
  class OperationTable {
   public:
    OperationTable(std::string          name,
                   std::size_t          arity,
                   std::size_t          n,
                   std::vector<element> table);

    std::string const& name() const noexcept {
      return _name;
    }
    std::size_t arity() const noexcept {
      return _arity;
    }
    std::size_t universe_size() const noexcept {
      return _n;
    }
    std::vector<element> const& table() const noexcept {
      return _table;
    }

    // Unchecked lookup by flat index.
    element at_index(std::size_t i) const noexcept {
      return _table[i];
    }

    // Checked lookup; throws ArgumentError on wrong length or range.
    element operator()(std::span<element const> args) const;

    bool operator==(OperationTable const&) const = default;

   private:
    std::string          _name;
    std::size_t          _arity;
    std::size_t          _n;
    std::vector<element> _table;
  };

  class Algebra {
   public:
    explicit Algebra(std::size_t n, std::vector<OperationTable> ops = {});

    std::size_t size() const noexcept {
      return _n;
    }
    std::vector<OperationTable> const& operations() const noexcept {
      return _ops;
    }

    // nullptr if there is no operation with this name.
    OperationTable const* find(std::string_view name) const noexcept;
    // Throws LookupError if there is no operation with this name.
    OperationTable const& operation(std::string_view name) const;

    // True if every operation is nullary (or there are none), so that every
    // reflexive relation is compatible.
    bool has_no_proper_operations() const noexcept;

    bool operator==(Algebra const&) const = default;

   private:
    std::size_t                 _n;
    std::vector<OperationTable> _ops;
  };

  element eval_op(Algebra const&           alg,
                  std::string_view         op,
                  std::span<element const> args);

  // Direct check that every operation preserves r: enumerates all |r|^k
  // tuples of pairs for an operation of arity k. Independent of closure().
  bool is_compatible(Algebra const& alg, BinRel const& r);

  enum class ClosureMode { reflexive, reflexive_symmetric };

  // Smallest reflexive (and, if requested, symmetric) relation containing
  // seed that every operation of alg preserves.
  BinRel closure(Algebra const&        alg,
                 std::span<Pair const> seed,
                 ClosureMode           mode);

  // Same as closure(alg, pairs(closed) + added, mode), assuming closed is
  // already a fixpoint for mode. Only the new pairs are propagated.
  BinRel extend_closure(Algebra const&        alg,
                        BinRel                closed,
                        std::span<Pair const> added,
                        ClosureMode           mode);

  struct RelationKind {
    bool tolerance;
    bool congruence;
    bool admissible;

    bool operator==(RelationKind const&) const = default;
  };

  // admissible = reflexive + compatible; tolerance = admissible + symmetric;
  // congruence = tolerance + transitive.
  RelationKind classify_relation(Algebra const& alg, BinRel const& r);

  struct ExpansionStats {
    // unordered pairs {a, b}, a != b, with a theta b
    std::size_t off_diagonal_pairs  = 0;
    // (pair, function) combinations over those pairs, 2^n each
    std::size_t generated_off_diagonal = 0;
    // one constant for each diagonal pair
    std::size_t generated_constants = 0;
    // unary tables actually added after removing duplicates
    std::size_t distinct = 0;
  };

  // Adds a unary operation for every function A -> {a, b} with a theta b,
  // identical tables kept once. Every non-trivial reflexive compatible
  // relation of the result contains theta. Throws PreconditionError unless
  // theta is a tolerance of alg.
  Algebra expand(Algebra const&  alg,
                 BinRel const&   theta,
                 ExpansionStats* stats = nullptr);

}  // namespace tolrep

#endif  // TOLREP_ALGEBRA_HPP_
