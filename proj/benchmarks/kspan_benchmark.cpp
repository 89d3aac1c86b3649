#include <benchmark/benchmark.h>

#include "kspan/kspan.hpp"

namespace {

void BM_QOrdering(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const kspan::Digraph d = kspan::gen_random(n, 7).to_digraph();
  for (auto _ : state) benchmark::DoNotOptimize(kspan::q_ordering(d, 0));
  state.SetComplexityN(n);
}
BENCHMARK(BM_QOrdering)->Arg(50)->Arg(100)->Arg(200)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_GoodSubgraph(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const kspan::Digraph d = kspan::gen_oriented(n, 2, 11);
  for (auto _ : state) benchmark::DoNotOptimize(kspan::good_subgraph(d, k, 2));
}
BENCHMARK(BM_GoodSubgraph)->Args({100, 2})->Args({200, 3})->Args({300, 5})->Unit(benchmark::kMillisecond);

void BM_Verifier(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const kspan::Digraph d = kspan::gen_k_connected(n, k, 3).to_digraph();
  for (auto _ : state) benchmark::DoNotOptimize(kspan::check_strongly_k_connected(d, k));
}
BENCHMARK(BM_Verifier)->Args({100, 2})->Args({200, 3})->Args({300, 5})->Unit(benchmark::kMillisecond);

void BM_InDominatingChain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const kspan::Tournament t = kspan::gen_random(n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(kspan::in_dominating_chain(t, 0));
}
BENCHMARK(BM_InDominatingChain)->Arg(100)->Arg(300)->Arg(500);

void BM_Sparsify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const kspan::Tournament t = kspan::gen_k_connected(n, k, 9);
  kspan::SparsifyOptions options;
  options.skip_validation = true;
  options.verify_output = false;
  options.force_pipeline = state.range(2) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(kspan::sparsify(t, k, options));
  state.counters["arcs"] = static_cast<double>(kspan::sparsify(t, k, options).report.arcs);
}
BENCHMARK(BM_Sparsify)
    ->Args({100, 2, 0})
    ->Args({300, 3, 0})
    ->Args({300, 2, 1})
    ->Args({350, 2, 0})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
