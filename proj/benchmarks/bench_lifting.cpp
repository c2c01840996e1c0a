#include <benchmark/benchmark.h>

#include "dcut/generators.hpp"
#include "dcut/pipeline.hpp"

namespace {

void stream(benchmark::State& state, const dcut::Graph& g, int d, dcut::Param p, dcut::Variant v) {
  std::uint64_t total = 0;
  for (auto _ : state) {
    std::uint64_t n = 0;
    dcut::enumerate_solutions(g, d, p, v, {}, [&](const dcut::EdgeCut& f) {
      benchmark::DoNotOptimize(f.edges.data());
      ++n;
      return true;
    });
    total += n;
  }
  state.counters["solutions_per_s"] = benchmark::Counter(static_cast<double>(total), benchmark::Counter::kIsRate);
}

void BM_StarAllCuts(benchmark::State& state) {
  const auto g = dcut::star_graph(static_cast<int>(state.range(0)));
  stream(state, g, 1, dcut::Param::vc, dcut::Variant::all);
}
BENCHMARK(BM_StarAllCuts)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_StarForestMaxCuts(benchmark::State& state) {
  const auto g = dcut::star_forest(3, static_cast<int>(state.range(0)));
  stream(state, g, 1, dcut::Param::vc, dcut::Variant::max);
}
BENCHMARK(BM_StarForestMaxCuts)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_StarForestMaxCutsNd(benchmark::State& state) {
  const auto g = dcut::star_forest(3, static_cast<int>(state.range(0)));
  stream(state, g, 1, dcut::Param::nd, dcut::Variant::max);
}
BENCHMARK(BM_StarForestMaxCutsNd)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_RandomBundleAll(benchmark::State& state) {
  const auto g = dcut::random_bundle(4, static_cast<int>(state.range(0)), 7);
  stream(state, g, 2, dcut::Param::vc, dcut::Variant::all);
}
BENCHMARK(BM_RandomBundleAll)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
