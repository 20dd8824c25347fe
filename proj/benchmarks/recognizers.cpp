#include <benchmark/benchmark.h>

#include "cayley/cayley.hpp"
#include "cayley/generators.hpp"

namespace {

using namespace cayley;

void BM_FastFan(benchmark::State& state) {
  const auto gg = gen_fan(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(low_cayley_fast(gg.graph, gg.base).low_complexity);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FastFan)->RangeMultiplier(2)->Range(16, 2048)->Complexity();

void BM_BruteFan(benchmark::State& state) {
  const auto gg = gen_fan(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(low_cayley_brute(gg.graph, gg.base).low_complexity);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BruteFan)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_FastOnPrecomputedSequence(benchmark::State& state) {
  const auto gg = gen_fan(static_cast<int>(state.range(0)));
  const auto seq = derive_construction(gg.graph, gg.base);
  for (auto _ : state) benchmark::DoNotOptimize(low_cayley_fast(seq).low_complexity);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FastOnPrecomputedSequence)->RangeMultiplier(2)->Range(16, 2048)->Complexity();

void BM_TreeDecomposableFan(benchmark::State& state) {
  const auto gg = gen_fan(static_cast<int>(state.range(0)));
  const Graph closed = gg.graph.with_edge(gg.base);
  for (auto _ : state) benchmark::DoNotOptimize(is_tree_decomposable(closed).has_value());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TreeDecomposableFan)->RangeMultiplier(2)->Range(16, 2048)->Complexity();

}  // namespace

BENCHMARK_MAIN();
