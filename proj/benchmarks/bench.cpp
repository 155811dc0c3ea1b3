#include <benchmark/benchmark.h>

#include "zsdl/families.hpp"
#include "zsdl/scan.hpp"
#include "zsdl/strong_resolving.hpp"
#include "zsdl/zero_forcing.hpp"

using namespace zsdl;

static void BM_ZeroForcingGrid(benchmark::State& state) {
  Graph g = grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(zero_forcing_value(g));
}
BENCHMARK(BM_ZeroForcingGrid)->DenseRange(3, 5);

static void BM_SdimGrid(benchmark::State& state) {
  Graph g = grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(strong_metric_dimension_value(g));
}
BENCHMARK(BM_SdimGrid)->DenseRange(3, 5);

static void BM_SdimCycle(benchmark::State& state) {
  Graph g = cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(strong_metric_dimension_value(g));
}
BENCHMARK(BM_SdimCycle)->Arg(12)->Arg(20);

static void BM_TreeEnumeration(benchmark::State& state) {
  TreeEnumeration trees(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    int edges = 0;
    for (std::uint64_t i = 0; i < trees.size(); ++i) edges += trees.tree(i).size();
    benchmark::DoNotOptimize(edges);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * trees.size()));
}
BENCHMARK(BM_TreeEnumeration)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

static void BM_TreeClaimsScan(benchmark::State& state) {
  std::vector<std::string> ids{"CLM-T-ZP", "CLM-T-SDIM", "CLM-T-LEQ"};
  auto spec = FamilySpec::parse("prufer-trees:n=" + std::to_string(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_claims(ids, spec));
}
BENCHMARK(BM_TreeClaimsScan)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
