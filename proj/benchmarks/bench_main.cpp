#include <random>  // for mt19937_64

#include <benchmark/benchmark.h>

#include "tolrep/tolrep.hpp"

namespace {
  using namespace tolrep;

  BinRel random_relation(std::mt19937_64& rng, std::size_t n) {
    std::bernoulli_distribution coin(0.3);
    BinRel                      r(n);
    for (element a = 0; a < n; ++a) {
      for (element b = 0; b < n; ++b) {
        if (coin(rng)) {
          r.insert(a, b);
        }
      }
    }
    return r;
  }

  void bm_compose(benchmark::State& state) {
    std::mt19937_64 rng(20241016);
    auto const      n = static_cast<std::size_t>(state.range(0));
    BinRel const    r = random_relation(rng, n);
    BinRel const    s = random_relation(rng, n);
    for (auto _ : state) {
      benchmark::DoNotOptimize(compose(r, s));
    }
  }
  BENCHMARK(bm_compose)->Arg(8)->Arg(32)->Arg(64);

  void bm_closure_s7(benchmark::State& state) {
    auto const s7 = corpus::s7_semilattice();
    Pair const seed[] = {{0, 1}, {1, 5}};
    for (auto _ : state) {
      benchmark::DoNotOptimize(closure(s7.algebra, seed, ClosureMode::reflexive));
    }
  }
  BENCHMARK(bm_closure_s7);

  void bm_find_representation_s7(benchmark::State& state) {
    auto const s7    = corpus::s7_semilattice();
    auto const theta = s7.relation("theta");
    for (auto _ : state) {
      benchmark::DoNotOptimize(find_representation(s7.algebra, theta));
    }
  }
  BENCHMARK(bm_find_representation_s7);

  void bm_enumerate_tolerances_chain(benchmark::State& state) {
    auto const c = corpus::chain(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(enumerate_tolerances(c.algebra));
    }
  }
  BENCHMARK(bm_enumerate_tolerances_chain)->Arg(4)->Arg(6);

  void bm_weak_expand_five(benchmark::State& state) {
    auto const e     = corpus::expand_five();
    auto const theta = e.relation("theta");
    for (auto _ : state) {
      benchmark::DoNotOptimize(find_weak_representation(e.algebra, theta));
    }
  }
  BENCHMARK(bm_weak_expand_five);
}  // namespace

BENCHMARK_MAIN();
