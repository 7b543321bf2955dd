#include "trifree/frame_encoding.hpp"
#include "trifree/online_game.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace trifree;

void BM_FirstFitGame(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    FirstFitPainter painter;
    benchmark::DoNotOptimize(run_game(k, painter).colors_used);
  }
}
BENCHMARK(BM_FirstFitGame)->DenseRange(2, 10, 2)->Unit(benchmark::kMicrosecond);

void BM_MinimaxVerify(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(minimax_verify(k, k));
}
BENCHMARK(BM_MinimaxVerify)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_EncodeFrames(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(encode(expand_tree(k)));
}
BENCHMARK(BM_EncodeFrames)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
