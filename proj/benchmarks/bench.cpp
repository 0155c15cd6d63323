#include <benchmark/benchmark.h>

#include <random>

#include "eventgraph/classicality.hpp"
#include "eventgraph/polytope.hpp"

using namespace eventgraph;

static void BM_Enumerate(benchmark::State& state) {
  EventGraph g = complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_classical_labellings(g));
}
BENCHMARK(BM_Enumerate)->DenseRange(4, 8);

static void BM_Realizable(benchmark::State& state) {
  EventGraph g = complete_graph(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(1);
  std::bernoulli_distribution coin(0.3);
  std::vector<EdgeLabelling> sample(256);
  for (auto& alpha : sample) {
    for (std::size_t e = 0; e < g.edge_count(); ++e) alpha.bits.push_back(coin(rng) ? 1 : 0);
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(is_realizable(g, sample[i++ % sample.size()]));
}
BENCHMARK(BM_Realizable)->Arg(6)->Arg(10);

static void BM_FacetsComplete(benchmark::State& state) {
  EventGraph g = complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classical_polytope(g));
}
BENCHMARK(BM_FacetsComplete)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_FacetsCycle(benchmark::State& state) {
  EventGraph g = cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classical_polytope(g));
}
BENCHMARK(BM_FacetsCycle)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
