#include "trifree/coloring.hpp"
#include "trifree/graph.hpp"
#include "trifree/independent.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace trifree;

void BM_ChromaticNumber(benchmark::State& state) {
  const Graph g = intersection_graph(augment(build(static_cast<int>(state.range(0)), catalog_entry("frame"))));
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const ChromaticResult r = chromatic_number(g);
    nodes = r.nodes;
    benchmark::DoNotOptimize(r.lower);
  }
  state.counters["vertices"] = static_cast<double>(g.size());
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_ChromaticNumber)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_Dsatur(benchmark::State& state) {
  const Graph g = intersection_graph(augment(build(4, catalog_entry("frame"))));
  for (auto _ : state) benchmark::DoNotOptimize(dsatur_coloring(g));
}
BENCHMARK(BM_Dsatur)->Unit(benchmark::kMicrosecond);

}  // namespace
