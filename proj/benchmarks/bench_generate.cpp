#include <benchmark/benchmark.h>

#include <random>

#include "d2k/baselines.hpp"
#include "d2k/construct.hpp"
#include "d2k/targets.hpp"

namespace {

d2k::DirectedGraph bounded_graph(d2k::NodeId n, d2k::Degree out_degree, d2k::Degree cap) {
  std::mt19937_64 rng(n);
  std::uniform_int_distribution<d2k::NodeId> pick(0, n - 1);
  d2k::DirectedGraph g(n);
  for (d2k::NodeId u = 0; u < n; ++u) {
    d2k::Degree placed = 0;
    while (placed < out_degree) {
      const auto v = pick(rng);
      if (v != u && g.in_degree(v) < cap && g.add_edge(u, v)) ++placed;
    }
  }
  return g;
}

void BM_GenerateD2K(benchmark::State& state) {
  const auto mode = state.range(1) == 0 ? d2k::PartitionMode::D2K : d2k::PartitionMode::D2Km;
  const auto t = d2k::extract_d2k(bounded_graph(state.range(0), 10, 20), mode);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(d2k::generate(t, ++seed));
  state.SetItemsProcessed(state.iterations() * t.edge_count());
}
BENCHMARK(BM_GenerateD2K)
    ->ArgsProduct({{10'000, 50'000, 100'000}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

void BM_GenerateD1K(benchmark::State& state) {
  const auto t = d2k::extract_dds(bounded_graph(state.range(0), 10, 20));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(d2k::gen_d1k(t, ++seed));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 10);
}
BENCHMARK(BM_GenerateD1K)->Arg(10'000)->Arg(50'000)->Unit(benchmark::kMillisecond);

void BM_ExtractD2K(benchmark::State& state) {
  const auto g = bounded_graph(state.range(0), 10, 20);
  for (auto _ : state) benchmark::DoNotOptimize(d2k::extract_d2k(g, d2k::PartitionMode::D2Km));
  state.SetItemsProcessed(state.iterations() * g.num_edges());
}
BENCHMARK(BM_ExtractD2K)->Arg(50'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
