#include <benchmark/benchmark.h>

#include "hikeforge/fixtures.hpp"
#include "hikeforge/identities.hpp"
#include "hikeforge/incidence.hpp"
#include "hikeforge/linalg.hpp"
#include "hikeforge/reconstruct.hpp"

using namespace hikeforge;

namespace {

Digraph complete_bidirected(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) arcs.push_back({i, j});
  return Digraph(n, arcs);
}

void BM_EnumeratePrimesK6(benchmark::State& state) {
  const Digraph g = complete_bidirected(6);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_primes(g));
}
BENCHMARK(BM_EnumeratePrimesK6);

void BM_EnumerateHikesPentagon(benchmark::State& state) {
  const PrimeCatalog cat = enumerate_primes(fixtures::crossed_pentagon());
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_hikes(cat, int(state.range(0))));
}
BENCHMARK(BM_EnumerateHikesPentagon)->Arg(8)->Arg(12);

void BM_CharPoly(benchmark::State& state) {
  const Digraph g = complete_bidirected(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(g));
}
BENCHMARK(BM_CharPoly)->Arg(8)->Arg(12);

void BM_PermanentalPoly(benchmark::State& state) {
  const Digraph g = complete_bidirected(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(permanental_poly(g));
}
BENCHMARK(BM_PermanentalPoly)->Arg(10)->Arg(12);

void BM_OrbitCounts(benchmark::State& state) {
  const Digraph g = complete_bidirected(4);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_orbits(g, 6));
}
BENCHMARK(BM_OrbitCounts);

void BM_MobiusSeries(benchmark::State& state) {
  const PrimeCatalog cat = enumerate_primes(fixtures::crossed_pentagon());
  for (auto _ : state) benchmark::DoNotOptimize(series_of(cat, fn_mobius(), 10));
}
BENCHMARK(BM_MobiusSeries);

void BM_ReconstructDemo(benchmark::State& state) {
  const SimpleGraph gamma = fixtures::reconstruction_demo_gamma();
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(gamma));
}
BENCHMARK(BM_ReconstructDemo);

void BM_DependenceGraphK6(benchmark::State& state) {
  const Digraph g = complete_bidirected(6);
  for (auto _ : state) benchmark::DoNotOptimize(dependence_graph(g));
}
BENCHMARK(BM_DependenceGraphK6);

}  // namespace

BENCHMARK_MAIN();
