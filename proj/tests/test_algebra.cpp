#include <array>  // for array
#include <set>    // for set

#include "catch_amalgamated.hpp"

#include "oracle.hpp"
#include "test_support.hpp"
#include "tolrep/algebra.hpp"
#include "tolrep/corpus.hpp"
#include "tolrep/errors.hpp"

namespace tolrep {
  using test::rel;

  namespace {
    // names from the corpus numbering
    constexpr element a = 0, b1 = 1, b2 = 2, b3 = 3, c = 4, top = 6;
  }  // namespace

  TEST_CASE("OperationTable and Algebra validation", "[algebra]") {
    CHECK_THROWS_AS(OperationTable("f", 2, 2, {0, 1, 1}), ArgumentError);
    CHECK_THROWS_AS(OperationTable("f", 1, 2, {0, 2}), ArgumentError);
    CHECK_THROWS_AS(OperationTable("", 1, 2, {0, 1}), ArgumentError);
    CHECK_NOTHROW(OperationTable("c", 0, 3, {2}));

    std::vector<OperationTable> dup{OperationTable("f", 1, 2, {0, 1}),
                                    OperationTable("f", 1, 2, {1, 0})};
    CHECK_THROWS_AS(Algebra(2, dup), ArgumentError);
    CHECK_THROWS_AS(Algebra(3, {OperationTable("f", 1, 2, {0, 1})}), DimensionError);
  }

  TEST_CASE("eval_op", "[algebra]") {
    auto const s7 = corpus::s7_semilattice();
    std::array<element, 2> args{b1, b2};
    CHECK(eval_op(s7.algebra, "join", args) == top);
    for (element x = 0; x < 7; ++x) {
      std::array<element, 2> xx{x, x};
      CHECK(eval_op(s7.algebra, "join", xx) == x);
    }

    auto const l7 = corpus::l7_majority();
    std::array<element, 3> atoms{b1, b2, b3};
    CHECK(eval_op(l7.algebra, "f", atoms) == top);

    CHECK_THROWS_AS(eval_op(s7.algebra, "meet", args), LookupError);
    std::array<element, 1> one{0};
    CHECK_THROWS_AS(eval_op(s7.algebra, "join", one), ArgumentError);
    std::array<element, 2> out_of_range{0, 7};
    CHECK_THROWS_AS(eval_op(s7.algebra, "join", out_of_range), ArgumentError);
  }

  TEST_CASE("is_compatible", "[algebra]") {
    std::mt19937_64 rng(11);
    Algebra const   set5(5);
    for (int i = 0; i < 20; ++i) {
      CHECK(is_compatible(set5, test::random_relation(rng, 5)));
    }

    auto const s7 = corpus::s7_semilattice();
    CHECK(is_compatible(s7.algebra, s7.relation("theta")));
    BinRel const r = rel(7, {{a, b1}, {b1, a}});
    // (a v b1, b1 v b1) = (top, b1) is missing
    CHECK_FALSE(oracle::compatible(s7.algebra, oracle::to_set(r)));
    CHECK_FALSE(is_compatible(s7.algebra, r));

    // a constant c needs (c, c)
    Algebra const pointed(3, {OperationTable("c", 0, 3, {1})});
    CHECK_FALSE(is_compatible(pointed, BinRel(3)));
    CHECK(is_compatible(pointed, BinRel::from_pairs(3, std::vector<Pair>{{1, 1}})));

    CHECK_THROWS_AS(is_compatible(s7.algebra, BinRel(3)), DimensionError);
  }

  TEST_CASE("closure examples", "[algebra]") {
    std::vector<Pair> const seed{{a, b1}};
    CHECK(closure(Algebra(5), seed, ClosureMode::reflexive_symmetric)
          == rel(5, {{a, b1}, {b1, a}}));
    CHECK(closure(Algebra(5), seed, ClosureMode::reflexive) == rel(5, {{a, b1}}));

    auto const s7 = corpus::s7_semilattice();
    // (a, b1) joined with (b1, b1) gives (top, b1)
    BinRel const closed = closure(s7.algebra, seed, ClosureMode::reflexive);
    CHECK(closed.contains(top, b1));
    CHECK(oracle::to_set(closed) == oracle::closure(s7.algebra, {{a, b1}}, false));

    std::vector<Pair> const bad{{0, 9}};
    CHECK_THROWS_AS(closure(s7.algebra, bad, ClosureMode::reflexive), ArgumentError);
  }

  TEST_CASE("closure is a closure operator", "[algebra][property]") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 150; ++i) {
      std::size_t const n = 1 + i % 4;
      std::vector<std::size_t> arities
          = i % 3 == 0 ? std::vector<std::size_t>{3}
                       : (i % 3 == 1 ? std::vector<std::size_t>{2} : std::vector<std::size_t>{1, 2});
      Algebra const alg  = test::random_algebra(rng, n, arities);
      auto const    mode = i % 2 == 0 ? ClosureMode::reflexive : ClosureMode::reflexive_symmetric;

      BinRel const s     = test::random_relation(rng, n, 0.15);
      BinRel const big   = unite(s, test::random_relation(rng, n, 0.15));
      auto const   s_p   = s.pairs();
      BinRel const cl    = closure(alg, s_p, mode);

      CHECK(is_subset(unite(s, BinRel::diagonal(n)), cl));
      CHECK(is_subset(cl, closure(alg, big.pairs(), mode)));
      CHECK(closure(alg, cl.pairs(), mode) == cl);
      CHECK(is_compatible(alg, cl));
      CHECK(oracle::to_set(cl)
            == oracle::closure(alg, oracle::to_set(s), mode == ClosureMode::reflexive_symmetric));
      if (mode == ClosureMode::reflexive_symmetric) {
        CHECK(classify_relation(alg, cl).tolerance);
      }

      // compatible iff the closure of a reflexive relation adds nothing
      BinRel const r = test::random_reflexive(rng, n);
      CHECK(is_compatible(alg, r) == (closure(alg, r.pairs(), ClosureMode::reflexive) == r));

      // extending a closed relation equals closing from scratch
      BinRel const extra = test::random_relation(rng, n, 0.1);
      CHECK(extend_closure(alg, cl, extra.pairs(), mode)
            == closure(alg, unite(cl, extra).pairs(), mode));
    }
  }

  TEST_CASE("classify_relation", "[algebra]") {
    auto const five = corpus::five_set();
    CHECK(classify_relation(five.algebra, five.relation("theta"))
          == RelationKind{true, false, true});

    std::mt19937_64 rng(13);
    for (int i = 0; i < 20; ++i) {
      std::size_t const n   = 1 + i % 4;
      Algebra const     alg = test::random_algebra(rng, n, {2});
      CHECK(classify_relation(alg, BinRel::diagonal(n)) == RelationKind{true, true, true});
      CHECK(classify_relation(alg, BinRel::full(n)) == RelationKind{true, true, true});
      auto const k = classify_relation(alg, test::random_relation(rng, n));
      CHECK((!k.congruence || k.tolerance));
      CHECK((!k.tolerance || k.admissible));
    }
    CHECK_THROWS_AS(classify_relation(five.algebra, BinRel(4)), DimensionError);
  }

  TEST_CASE("expand", "[algebra]") {
    auto const five  = corpus::five_set();
    auto const theta = five.relation("theta");

    // Count the maps A -> {x, y} independently of expand().
    std::size_t                    unordered = 0;
    std::set<std::vector<element>> maps;
    for (element x = 0; x < 5; ++x) {
      for (element y = x; y < 5; ++y) {
        if (!theta.test(x, y)) {
          continue;
        }
        unordered += x != y;
        for (unsigned mask = 0; mask < 32; ++mask) {
          std::vector<element> f(5);
          for (element e = 0; e < 5; ++e) {
            f[e] = ((mask >> e) & 1u) ? y : x;
          }
          maps.insert(f);
        }
      }
    }
    REQUIRE(unordered == 6);
    REQUIRE(maps.size() == 185);

    ExpansionStats stats;
    Algebra const  plus = expand(five.algebra, theta, &stats);
    CHECK(stats.off_diagonal_pairs == 6);
    CHECK(stats.generated_off_diagonal == 192);
    CHECK(stats.generated_constants == 5);
    CHECK(stats.distinct == maps.size());
    CHECK(plus.operations().size() == maps.size());
    std::set<std::vector<element>> tables;
    for (auto const& op : plus.operations()) {
      CHECK(op.arity() == 1);
      tables.insert(op.table());
    }
    CHECK(tables == maps);
    CHECK(classify_relation(plus, theta).tolerance);

    // the diagonal only gives constants
    Algebra const consts = expand(five.algebra, BinRel::diagonal(5));
    CHECK(consts.operations().size() == 5);

    // existing operations survive and names stay unique
    auto const s7      = corpus::s7_semilattice();
    Algebra const s7p  = expand(s7.algebra, s7.relation("theta"));
    CHECK(s7p.find("join") != nullptr);
    CHECK(s7p.operations().front() == s7.algebra.operations().front());

    CHECK_THROWS_AS(expand(five.algebra, rel(5, {{0, 1}})), PreconditionError);
  }

  TEST_CASE("expansion: every nontrivial compatible reflexive relation contains theta",
            "[algebra][property]") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 30; ++i) {
      std::size_t const n     = 2 + i % 3;
      Algebra const     alg   = test::random_algebra(rng, n, {2});
      auto const        tols  = oracle::tolerances(alg);
      auto const&       pick  = tols[rng() % tols.size()];
      BinRel const      theta = oracle::to_binrel(n, pick);
      Algebra const     plus  = expand(alg, theta);
      for (element x = 0; x < n; ++x) {
        for (element y = 0; y < n; ++y) {
          if (x != y) {
            Pair const p(x, y);
            CHECK(is_subset(theta, closure(plus, {&p, 1}, ClosureMode::reflexive)));
          }
        }
      }
    }
  }

}  // namespace tolrep
