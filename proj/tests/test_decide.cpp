#include <set>  // for set

#include "catch_amalgamated.hpp"

#include "oracle.hpp"
#include "test_support.hpp"
#include "tolrep/corpus.hpp"
#include "tolrep/decide.hpp"
#include "tolrep/errors.hpp"

namespace tolrep {
  using test::rel;

  namespace {
    // Every reflexive compatible relation, by brute force over all
    // reflexive relations (n <= 4).
    std::vector<oracle::PairSet> brute_admissible(Algebra const& alg) {
      std::size_t const n = alg.size();
      std::vector<Pair> off;
      for (element x = 0; x < n; ++x) {
        for (element y = 0; y < n; ++y) {
          if (x != y) {
            off.emplace_back(x, y);
          }
        }
      }
      std::vector<oracle::PairSet> out;
      for (std::size_t mask = 0; mask < (std::size_t(1) << off.size()); ++mask) {
        auto r = oracle::diagonal(n);
        for (std::size_t i = 0; i < off.size(); ++i) {
          if ((mask >> i) & 1u) {
            r.insert(off[i]);
          }
        }
        if (oracle::compatible(alg, r)) {
          out.push_back(std::move(r));
        }
      }
      return out;
    }

    bool brute_weakly_representable(Algebra const& alg, oracle::PairSet const& theta) {
      auto const        family = brute_admissible(alg);
      std::size_t const n      = alg.size();
      for (element x = 0; x < n; ++x) {
        for (element y = 0; y < n; ++y) {
          if (theta.count({x, y}) != 0) {
            continue;
          }
          bool separated = false;
          for (auto const& r : family) {
            auto const rr = oracle::compose(r, oracle::converse(r));
            if (oracle::includes(rr, theta) && rr.count({x, y}) == 0) {
              separated = true;
              break;
            }
          }
          if (!separated) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  TEST_CASE("find_representation on the corpus", "[decide]") {
    auto const five = corpus::five_set();
    CHECK_FALSE(find_representation(five.algebra, five.relation("theta")));

    auto const s7 = corpus::s7_semilattice();
    CHECK_FALSE(find_representation(s7.algebra, s7.relation("theta")));

    auto const l7 = corpus::l7_majority();
    CHECK_FALSE(find_representation(l7.algebra, l7.relation("theta")));

    auto const tab = corpus::theta_ab(5, 0, 1);
    auto const found = find_representation(tab.algebra, tab.relation("theta"));
    REQUIRE(found);
    CHECK(verify_representation(tab.algebra, tab.relation("theta"), found->relation));
  }

  TEST_CASE("find_representation trivial cases", "[decide]") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 20; ++i) {
      std::size_t const n   = 1 + i % 5;
      Algebra const     alg = test::random_algebra(rng, n, {2});
      SearchStats       stats;
      auto const found = find_representation(alg, BinRel::diagonal(n), {}, &stats);
      REQUIRE(found);
      CHECK(found->relation == BinRel::diagonal(n));
      CHECK(stats.nodes == 0);

      for (auto const& alpha : enumerate_congruences(alg)) {
        auto const w = find_representation(alg, alpha);
        REQUIRE(w);
        CHECK(verify_representation(alg, alpha, w->relation));
        CHECK(verify_representation(alg, alpha, alpha));
      }
    }
  }

  TEST_CASE("find_representation errors", "[decide]") {
    auto const s7 = corpus::s7_semilattice();
    SearchOptions tiny;
    tiny.node_budget = 1;
    CHECK_THROWS_AS(find_representation(s7.algebra, s7.relation("theta"), tiny),
                    ResourceError);
    CHECK_THROWS_AS(find_representation(s7.algebra, rel(7, {{0, 1}})), PreconditionError);
    CHECK_THROWS_AS(find_representation(s7.algebra, BinRel::diagonal(5)), DimensionError);
  }

  TEST_CASE("find_representation agrees with exhaustive subset search",
            "[decide][property]") {
    std::mt19937_64 rng(22);
    std::size_t     yes = 0, no = 0;
    for (int i = 0; i < 120; ++i) {
      std::size_t const n = 2 + i % 3;
      auto const arities  = i % 2 == 0 ? std::vector<std::size_t>{1}
                                       : std::vector<std::size_t>{2};
      Algebra const alg = test::random_algebra(rng, n, arities);
      for (auto const& theta_set : oracle::tolerances(alg)) {
        BinRel const theta = oracle::to_binrel(n, theta_set);
        auto const   found = find_representation(alg, theta);
        auto const   brute = oracle::representation(alg, theta_set);
        REQUIRE(found.has_value() == brute.has_value());
        if (found) {
          ++yes;
          CHECK(verify_representation(alg, theta, found->relation));
          CHECK(is_subset(found->relation, theta));
          CHECK(find_weak_representation(alg, theta).has_value());
        } else {
          ++no;
        }
      }
    }
    CHECK(yes > 0);
    CHECK(no > 0);
  }

  TEST_CASE("pruned search nodes have no witness above them", "[decide][property]") {
    std::mt19937_64 rng(23);
    std::size_t     pruned = 0;
    auto check_instance = [&](Algebra const& alg, BinRel const& theta) {
      std::vector<BinRel> nodes;
      SearchOptions       opts;
      opts.observer = [&](BinRel const& r, SearchEvent ev) {
        if (ev == SearchEvent::pruned_composition) {
          nodes.push_back(r);
        }
        if (ev == SearchEvent::node) {
          CHECK(is_subset(r, theta));
          CHECK(is_compatible(alg, r));
        }
      };
      (void) find_representation(alg, theta, opts);
      for (auto const& r : nodes) {
        ++pruned;
        for (int k = 0; k < 10; ++k) {
          BinRel const up = unite(r, test::random_relation(rng, alg.size(), 0.2));
          auto const   us = oracle::to_set(up);
          CHECK_FALSE(oracle::includes(oracle::to_set(theta),
                                       oracle::compose(us, oracle::converse(us))));
        }
      }
    };
    auto const five = corpus::five_set();
    check_instance(five.algebra, five.relation("theta"));
    auto const s7 = corpus::s7_semilattice();
    check_instance(s7.algebra, s7.relation("theta"));
    for (int i = 0; i < 40; ++i) {
      std::size_t const n   = 3 + i % 3;
      Algebra const     alg = test::random_algebra(rng, n, {1});
      for (auto const& t : enumerate_tolerances(alg)) {
        check_instance(alg, t);
      }
    }
    CHECK(pruned > 0);
  }

  TEST_CASE("represent_via_order", "[decide]") {
    auto const m3 = corpus::m3();
    auto const w  = represent_via_order(m3.algebra, "join", "meet", BinRel::full(5));
    CHECK(w.relation == m3.relation("leq"));
    auto const ls = oracle::to_set(w.relation);
    CHECK(oracle::compose(ls, oracle::converse(ls)) == oracle::to_set(BinRel::full(5)));

    for (auto const& lat : {corpus::m3(), corpus::n5(), corpus::chain(3)}) {
      std::size_t const n = lat.algebra.size();
      CHECK(represent_via_order(lat.algebra, "join", "meet", BinRel::diagonal(n)).relation
            == BinRel::diagonal(n));
    }

    auto const        n5 = corpus::n5();
    Pair const        zero_a(0, 1);
    BinRel const      theta = closure(n5.algebra, {&zero_a, 1}, ClosureMode::reflexive_symmetric);
    auto const        nw    = represent_via_order(n5.algebra, "join", "meet", theta);
    CHECK(verify_representation(n5.algebra, theta, nw.relation));
    CHECK(nw.relation == intersect(theta, n5.relation("leq")));
  }

  TEST_CASE("represent_via_order precondition failures", "[decide]") {
    auto const s7 = corpus::s7_semilattice();
    CHECK_THROWS_AS(represent_via_order(s7.algebra, "join", "meet", BinRel::diagonal(7)),
                    LookupError);

    // meet replaced by join breaks a ^ (a v b) = a
    auto const m3    = corpus::m3();
    auto const join  = m3.algebra.operation("join");
    Algebra    bogus(5, {join, OperationTable("meet", 2, 5, join.table())});
    CHECK_THROWS_WITH(represent_via_order(bogus, "join", "meet", BinRel::diagonal(5)),
                      Catch::Matchers::ContainsSubstring("a ^ (a v b) = a"));

    // a non-idempotent "join"
    Algebra zero(2, {OperationTable("join", 2, 2, {0, 0, 0, 0}),
                     OperationTable("meet", 2, 2, {0, 0, 0, 1})});
    CHECK_THROWS_AS(represent_via_order(zero, "join", "meet", BinRel::diagonal(2)),
                    PreconditionError);

    // complementation on the two-element chain does not preserve the order
    auto const c2 = corpus::chain(2);
    auto       ops = c2.algebra.operations();
    ops.emplace_back("neg", 1, 2, std::vector<element>{1, 0});
    Algebra const with_neg(2, ops);
    CHECK_THROWS_WITH(represent_via_order(with_neg, "join", "meet", BinRel::diagonal(2)),
                      Catch::Matchers::ContainsSubstring("not compatible"));

    CHECK_THROWS_AS(represent_via_order(m3.algebra, "join", "meet", rel(5, {{1, 2}})),
                    PreconditionError);
  }

  TEST_CASE("enumerate_admissible", "[decide]") {
    CHECK(enumerate_admissible(Algebra(2), 1000).relations.size() == 4);
    auto const three = enumerate_admissible(Algebra(3), 1000);
    CHECK(three.relations.size() == 64);
    CHECK_FALSE(three.truncated);

    auto const cut = enumerate_admissible(Algebra(3), 10);
    CHECK(cut.relations.size() == 10);
    CHECK(cut.truncated);
    CHECK_FALSE(enumerate_admissible(Algebra(3), 64).truncated);
    CHECK(enumerate_admissible(Algebra(3), 63).truncated);
    CHECK_THROWS_AS(enumerate_admissible(Algebra(3), 0), ArgumentError);

    auto const plus  = corpus::expand_five();
    auto const theta = plus.relation("theta");
    auto const all   = enumerate_admissible(plus.algebra, 100000);
    CHECK_FALSE(all.truncated);
    for (auto const& r : all.relations) {
      if (r != BinRel::diagonal(5)) {
        CHECK(is_subset(theta, r));
      }
    }

    std::mt19937_64 rng(24);
    for (int i = 0; i < 30; ++i) {
      std::size_t const n   = 1 + i % 3;
      Algebra const     alg = test::random_algebra(rng, n, {i % 2 == 0 ? 1u : 2u});
      auto const        got = enumerate_admissible(alg, 1000);
      std::set<oracle::PairSet> got_set;
      for (auto const& r : got.relations) {
        CHECK(closure(alg, r.pairs(), ClosureMode::reflexive) == r);
        got_set.insert(oracle::to_set(r));
      }
      CHECK(got_set.size() == got.relations.size());
      auto const brute = brute_admissible(alg);
      CHECK(got_set == std::set<oracle::PairSet>(brute.begin(), brute.end()));
    }
  }

  TEST_CASE("find_weak_representation", "[decide]") {
    auto const five  = corpus::five_set();
    auto const theta = five.relation("theta");
    auto const w     = find_weak_representation(five.algebra, theta);
    REQUIRE(w);
    CHECK(w->separators.size() == 8);
    CHECK(verify_weak_representation(five.algebra, theta, *w));

    auto const plus = corpus::expand_five();
    CHECK_FALSE(find_weak_representation(plus.algebra, theta));

    Algebra const s7 = corpus::s7_semilattice().algebra;
    auto const    d  = find_weak_representation(s7, BinRel::diagonal(7));
    REQUIRE(d);
    CHECK(d->separators.size() == 42);
    for (auto const& [p, r] : d->separators) {
      CHECK(r == BinRel::diagonal(7));
    }

    auto const full = find_weak_representation(s7, BinRel::full(7));
    REQUIRE(full);
    CHECK(full->separators.empty());
    CHECK(verify_weak_representation(s7, BinRel::full(7), *full));

    SearchOptions tiny;
    tiny.relation_budget = 1;
    auto const n5 = corpus::n5();
    CHECK_THROWS_AS(find_weak_representation(n5.algebra, n5.relation("leq")),
                    PreconditionError);
    Pair const   p(0, 1);
    BinRel const t = closure(n5.algebra, {&p, 1}, ClosureMode::reflexive_symmetric);
    CHECK_THROWS_AS(find_weak_representation(n5.algebra, t, tiny), ResourceError);
  }

  TEST_CASE("weak representability agrees with brute force", "[decide][property]") {
    std::mt19937_64 rng(25);
    std::size_t     yes = 0, no = 0;
    for (int i = 0; i < 60; ++i) {
      std::size_t const n   = 2 + i % 3;
      Algebra const     alg = test::random_algebra(rng, n, {1, 1});
      for (auto const& theta_set : oracle::tolerances(alg)) {
        BinRel const theta = oracle::to_binrel(n, theta_set);
        auto const   found = find_weak_representation(alg, theta);
        REQUIRE(found.has_value() == brute_weakly_representable(alg, theta_set));
        if (found) {
          ++yes;
          CHECK(verify_weak_representation(alg, theta, *found));
        } else {
          ++no;
        }
      }
    }
    CHECK(yes > 0);
    CHECK(no > 0);
  }

  TEST_CASE("enumerate_tolerances and enumerate_congruences", "[decide]") {
    auto const one = enumerate_tolerances(Algebra(1));
    REQUIRE(one.size() == 1);
    CHECK(one[0] == BinRel::diagonal(1));

    CHECK(enumerate_tolerances(Algebra(3)).size() == 8);
    CHECK(enumerate_congruences(Algebra(3)).size() == 5);

    auto const m3   = corpus::m3();
    auto const tols = enumerate_tolerances(m3.algebra);
    auto const brute = oracle::tolerances(m3.algebra);
    std::set<oracle::PairSet> tol_set;
    for (auto const& t : tols) {
      CHECK(classify_relation(m3.algebra, t).tolerance);
      tol_set.insert(oracle::to_set(t));
    }
    CHECK(tol_set == std::set<oracle::PairSet>(brute.begin(), brute.end()));
    CHECK(tol_set.count(oracle::to_set(BinRel::diagonal(5))) == 1);
    CHECK(tol_set.count(oracle::to_set(BinRel::full(5))) == 1);

    auto const congs = enumerate_congruences(m3.algebra);
    REQUIRE(congs.size() == 2);
    CHECK(congs[0] == BinRel::diagonal(5));
    CHECK(congs[1] == BinRel::full(5));

    std::mt19937_64 rng(26);
    for (int i = 0; i < 30; ++i) {
      Algebra const alg = test::random_algebra(rng, 1 + i % 4, {2});
      auto const    ts  = enumerate_tolerances(alg);
      for (auto const& c : enumerate_congruences(alg)) {
        CHECK(std::find(ts.begin(), ts.end(), c) != ts.end());
      }
    }

    SearchOptions tiny;
    tiny.relation_budget = 2;
    CHECK_THROWS_AS(enumerate_tolerances(Algebra(3), tiny), ResourceError);
  }

  TEST_CASE("tolerance_join", "[decide]") {
    Algebra const set3(3);
    BinRel const  eq01 = rel(3, {{0, 1}, {1, 0}});
    BinRel const  eq12 = rel(3, {{1, 2}, {2, 1}});
    CHECK(tolerance_join(set3, eq01, eq01) == eq01);
    CHECK(tolerance_join(set3, BinRel::diagonal(3), eq12) == eq12);

    BinRel const join = tolerance_join(set3, eq01, eq12);
    CHECK(join == rel(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}}));
    auto const ba = oracle::compose(oracle::to_set(eq12), oracle::to_set(eq01));
    CHECK(oracle::includes(ba, oracle::to_set(join)));
    CHECK(is_subset(join, compose(eq12, eq01)));

    CHECK_THROWS_AS(tolerance_join(set3, rel(3, {{0, 1}}), eq12), PreconditionError);
  }

  TEST_CASE("check_permutability", "[decide]") {
    CHECK(check_permutability(Algebra(1)).permutable);
    CHECK(check_permutability(corpus::m3().algebra).permutable);

    auto const report = check_permutability(Algebra(3));
    REQUIRE_FALSE(report.permutable);
    REQUIRE(report.counterexample);
    auto const& cx = *report.counterexample;
    CHECK(compose(cx.alpha, cx.beta).test(cx.pair.first, cx.pair.second));
    CHECK_FALSE(compose(cx.beta, cx.alpha).test(cx.pair.first, cx.pair.second));

    // the classic pair eq(01), eq(12) fails at (0, 2)
    BinRel const eq01 = rel(3, {{0, 1}, {1, 0}});
    BinRel const eq12 = rel(3, {{1, 2}, {2, 1}});
    auto const   ab   = oracle::compose(oracle::to_set(eq01), oracle::to_set(eq12));
    auto const   ba   = oracle::compose(oracle::to_set(eq12), oracle::to_set(eq01));
    CHECK(ab.count({0, 2}) == 1);
    CHECK(ba.count({0, 2}) == 0);
  }

  TEST_CASE("verifiers reject bad witnesses", "[decide]") {
    auto const five  = corpus::five_set();
    auto const theta = five.relation("theta");
    CHECK_FALSE(verify_representation(five.algebra, theta, theta));
    CHECK_FALSE(verify_representation(five.algebra, theta, BinRel(5)));

    auto const s7 = corpus::s7_semilattice();
    BinRel const incompatible = rel(7, {{0, 1}, {1, 0}});
    CHECK_FALSE(verify_representation(s7.algebra, incompatible, incompatible));

    WeakRepWitness w = *find_weak_representation(five.algebra, theta);
    w.separators.begin()->second = BinRel::diagonal(5);
    CHECK_FALSE(verify_weak_representation(five.algebra, theta, w));
  }

}  // namespace tolrep
