#include "trifree/graph.hpp"
#include "trifree/independent.hpp"
#include "trifree/uniform.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace trifree;

void BM_BuildIndependent(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(augment(build(k, catalog_entry("frame"))));
}
BENCHMARK(BM_BuildIndependent)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_BuildUniform(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto anchored = catalog_entry("frame").anchored;
  for (auto _ : state) benchmark::DoNotOptimize(augment_uniform(build_uniform(k, Rat(1, 2), anchored)));
}
BENCHMARK(BM_BuildUniform)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_IntersectionGraph(benchmark::State& state) {
  const auto family = augment(build(4, catalog_entry("frame")));
  const auto jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(intersection_graph(family, jobs));
  state.counters["pairs"] = static_cast<double>(family.size() * (family.size() - 1) / 2);
}
BENCHMARK(BM_IntersectionGraph)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
