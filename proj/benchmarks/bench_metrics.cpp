#include <benchmark/benchmark.h>

#include <random>

#include "d2k/metrics.hpp"

namespace {

d2k::DirectedGraph random_graph(d2k::NodeId n, double p) {
  std::mt19937_64 rng(n);
  std::bernoulli_distribution edge(p);
  d2k::DirectedGraph g(n);
  for (d2k::NodeId u = 0; u < n; ++u) {
    for (d2k::NodeId v = 0; v < n; ++v) {
      if (u != v && edge(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

void BM_TriadCensus(benchmark::State& state) {
  const auto g = random_graph(state.range(0), 8.0 / state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(d2k::triad_census(g));
}
BENCHMARK(BM_TriadCensus)->Arg(1'000)->Arg(4'000)->Unit(benchmark::kMillisecond);

void BM_Dsp(benchmark::State& state) {
  const auto g = random_graph(2'000, 0.004);
  for (auto _ : state) {
    benchmark::DoNotOptimize(d2k::dsp(g, d2k::DspVariant::TwoPath, state.range(0)));
  }
}
BENCHMARK(BM_Dsp)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Betweenness(benchmark::State& state) {
  const auto g = random_graph(state.range(0), 6.0 / state.range(0));
  d2k::MeasureConfig config;
  config.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(d2k::betweenness(g, config));
}
BENCHMARK(BM_Betweenness)->Arg(500)->Arg(1'000)->Unit(benchmark::kMillisecond);

void BM_Eigenvalues(benchmark::State& state) {
  const auto g = random_graph(state.range(0), 6.0 / state.range(0));
  d2k::MeasureConfig config;
  config.dense_eigen_threshold = state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(d2k::top_eigenvalues(g, config));
}
BENCHMARK(BM_Eigenvalues)->Args({1'000, 2'000})->Args({1'000, 0})->Unit(benchmark::kMillisecond);

void BM_StructuralSuite(benchmark::State& state) {
  const auto g = random_graph(1'000, 0.006);
  for (auto _ : state) benchmark::DoNotOptimize(d2k::structural_suite(g, {}));
}
BENCHMARK(BM_StructuralSuite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
