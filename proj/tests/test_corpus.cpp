#include "catch_amalgamated.hpp"

#include "oracle.hpp"
#include "tolrep/corpus.hpp"
#include "tolrep/decide.hpp"
#include "tolrep/errors.hpp"

namespace tolrep {

  namespace {
    element index_of(CorpusEntry const& e, std::string const& name) {
      for (element i = 0; i < e.element_names.size(); ++i) {
        if (e.element_names[i] == name) {
          return i;
        }
      }
      FAIL("no element " << name);
      return 0;
    }
  }  // namespace

  TEST_CASE("five_set", "[corpus]") {
    auto const e     = corpus::five_set();
    auto const theta = e.relation("theta");
    CHECK(e.algebra.size() == 5);
    CHECK(e.algebra.operations().empty());
    CHECK(theta.count() == 17);
    CHECK(classify_relation(e.algebra, theta).tolerance);
    CHECK_FALSE(is_transitive(theta));

    element const a = index_of(e, "a");
    element const c = index_of(e, "c");
    for (auto const* b : {"b1", "b2", "b3"}) {
      element const bi = index_of(e, b);
      CHECK(theta.test(a, bi));
      CHECK(theta.test(bi, c));
    }
    CHECK_FALSE(theta.test(a, c));
    CHECK_FALSE(theta.test(index_of(e, "b1"), index_of(e, "b2")));
    CHECK_THROWS_AS(e.relation("nope"), LookupError);
  }

  TEST_CASE("s7_semilattice", "[corpus]") {
    auto const e     = corpus::s7_semilattice();
    auto const theta = e.relation("theta");
    auto const leq   = e.relation("leq");
    CHECK(e.algebra.size() == 7);
    CHECK(classify_relation(e.algebra, theta).tolerance);
    CHECK_FALSE(classify_relation(e.algebra, theta).congruence);
    CHECK(is_compatible(e.algebra, leq));

    auto const&   join = e.algebra.operation("join");
    element const top  = index_of(e, "1");
    std::vector<element> minimals;
    for (element x = 0; x < 7; ++x) {
      CHECK(theta.test(top, x));
      CHECK(leq.test(x, top));
      if (x != top) {
        minimals.push_back(x);
      }
      for (element y = 0; y < 7; ++y) {
        element const args[] = {x, y};
        element const j      = join(args);
        CHECK(leq.test(x, j));
        CHECK(leq.test(y, j));
        CHECK(j == (x == y ? x : top));
      }
    }
    CHECK(minimals.size() == 6);

    // no three minimal elements are pairwise related by theta
    for (auto x : minimals) {
      for (auto y : minimals) {
        for (auto z : minimals) {
          if (x != y && y != z && x != z) {
            CHECK_FALSE((theta.test(x, y) && theta.test(y, z) && theta.test(x, z)));
          }
        }
      }
    }
  }

  TEST_CASE("l7_majority", "[corpus]") {
    auto const e = corpus::l7_majority();
    auto const& f = e.algebra.operation("f");
    CHECK(f.arity() == 3);
    for (element x = 0; x < 7; ++x) {
      for (element y = 0; y < 7; ++y) {
        element const xxy[] = {x, x, y};
        element const xyx[] = {x, y, x};
        element const yxx[] = {y, x, x};
        CHECK(f(xxy) == x);
        CHECK(f(xyx) == x);
        CHECK(f(yxx) == x);
      }
    }
    CHECK(classify_relation(e.algebra, e.relation("theta")).tolerance);
    CHECK(e.relation("theta") == corpus::s7_semilattice().relation("theta"));
  }

  TEST_CASE("lattices", "[corpus]") {
    for (auto const& e : {corpus::m3(), corpus::n5(), corpus::chain(4)}) {
      INFO(e.name);
      auto const& join = e.algebra.operation("join");
      auto const& meet = e.algebra.operation("meet");
      auto const  leq  = e.relation("leq");
      CHECK(is_reflexive(leq));
      CHECK(is_transitive(leq));
      for (element x = 0; x < e.algebra.size(); ++x) {
        for (element y = 0; y < e.algebra.size(); ++y) {
          element const xy[] = {x, y};
          element const yx[] = {y, x};
          CHECK(join(xy) == join(yx));
          CHECK(meet(xy) == meet(yx));
          CHECK(leq.test(x, y) == (join(xy) == y));
          CHECK(leq.test(x, y) == (meet(xy) == x));
        }
      }
    }
    auto const n5 = corpus::n5();
    CHECK(n5.relation("leq").test(index_of(n5, "a"), index_of(n5, "b")));
    CHECK_FALSE(n5.relation("leq").test(index_of(n5, "a"), index_of(n5, "c")));
    CHECK(corpus::chain(1).algebra.size() == 1);
    CHECK_THROWS_AS(corpus::chain(0), ArgumentError);
  }

  TEST_CASE("theta_ab is represented by R", "[corpus]") {
    for (std::size_t n = 2; n <= 6; ++n) {
      for (element a = 0; a < n; ++a) {
        for (element b = 0; b < n; ++b) {
          if (a == b) {
            CHECK_THROWS_AS(corpus::theta_ab(n, a, b), ArgumentError);
            continue;
          }
          auto const e     = corpus::theta_ab(n, a, b);
          auto const theta = e.relation("theta");
          auto const r     = oracle::to_set(e.relation("R"));
          CHECK(oracle::compose(r, oracle::converse(r)) == oracle::to_set(theta));
          CHECK(theta.count() == n * n - 2);
          CHECK(verify_representation(e.algebra, theta, e.relation("R")));
        }
      }
    }
  }

  TEST_CASE("expand_five", "[corpus]") {
    auto const e = corpus::expand_five();
    CHECK(e.algebra.size() == 5);
    CHECK(e.algebra.operations().size() == 185);
    CHECK(classify_relation(e.algebra, e.relation("theta")).tolerance);
  }

  TEST_CASE("corpus_get", "[corpus]") {
    for (auto const& name : corpus_names()) {
      if (name.find('(') == std::string::npos) {
        CHECK_NOTHROW(corpus_get(name));
      }
    }
    CHECK(corpus_get("chain(4)").algebra.size() == 4);
    CHECK(corpus_get("theta_ab(5,0,1)").relation("theta")
          == corpus::theta_ab(5, 0, 1).relation("theta"));
    CHECK(corpus_get("five_set").relation("theta") == corpus::five_set().relation("theta"));

    CHECK_THROWS_AS(corpus_get("nonexistent"), LookupError);
    CHECK_THROWS_AS(corpus_get("chain(4"), LookupError);
    CHECK_THROWS_AS(corpus_get("chain()"), ArgumentError);
    CHECK_THROWS_AS(corpus_get("chain(x)"), ArgumentError);
    CHECK_THROWS_AS(corpus_get("chain(1,2)"), ArgumentError);
    CHECK_THROWS_AS(corpus_get("m3(1)"), ArgumentError);
    CHECK_THROWS_AS(corpus_get("theta_ab(3,1,1)"), ArgumentError);
    CHECK_THROWS_AS(corpus_get("theta_ab(5,0,99)"), ArgumentError);
  }

}  // namespace tolrep
