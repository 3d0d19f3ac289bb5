#include <benchmark/benchmark.h>

#include "flagpoly/fflv.hpp"
#include "flagpoly/flagcoords.hpp"
#include "flagpoly/gz.hpp"
#include "flagpoly/lattice.hpp"
#include "flagpoly/novaluation.hpp"
#include "flagpoly/replib.hpp"

using namespace flagpoly;

namespace {

const Weight& staircase(std::int64_t n) {
  static const std::vector<Weight> ws = {Weight({2, 1, 0}), Weight({3, 2, 1, 0}), Weight({4, 3, 2, 1, 0})};
  return ws.at(static_cast<std::size_t>(n - 3));
}

void BM_FflvCount(benchmark::State& state) {
  Polytope p = fflv_polytope(staircase(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_lattice_points(p));
}
BENCHMARK(BM_FflvCount)->DenseRange(3, 5);

void BM_GzCount(benchmark::State& state) {
  Polytope p = gz_polytope(staircase(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_lattice_points(p));
}
BENCHMARK(BM_GzCount)->DenseRange(3, 5);

void BM_GzCountFast(benchmark::State& state) {
  const Weight& w = staircase(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gz_count_fast(w));
}
BENCHMARK(BM_GzCountFast)->DenseRange(3, 5);

void BM_BruteCount(benchmark::State& state) {
  Polytope p = fflv_polytope(staircase(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brute_count(p));
}
BENCHMARK(BM_BruteCount)->DenseRange(3, 4);

void BM_EnumeratorSetup(benchmark::State& state) {
  Polytope p = fflv_polytope(staircase(state.range(0)));
  for (auto _ : state) {
    LatticeEnumerator en(p);
    benchmark::DoNotOptimize(en.dim());
  }
}
BENCHMARK(BM_EnumeratorSetup)->DenseRange(3, 5);

void BM_Irredundant(benchmark::State& state) {
  Polytope p = fflv_polytope(staircase(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(irredundant(p).facets.size());
}
BENCHMARK(BM_Irredundant)->DenseRange(3, 5);

void BM_Vertices(benchmark::State& state) {
  Polytope p = gz_polytope(staircase(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vertices(p).size());
}
BENCHMARK(BM_Vertices)->DenseRange(3, 4);

void BM_BuildConfig(benchmark::State& state) {
  for (auto _ : state) {
    FlagConfig c = build_config(static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(c.n());
  }
}
BENCHMARK(BM_BuildConfig)->DenseRange(3, 7);

void BM_G36Minors(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(no_points("g36_111000").size());
}
BENCHMARK(BM_G36Minors);

}  // namespace

BENCHMARK_MAIN();
