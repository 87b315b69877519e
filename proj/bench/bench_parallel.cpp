#include <benchmark/benchmark.h>

#include "curvesys/farey.hpp"
#include "curvesys/genus.hpp"

using namespace curvesys;

static void BM_PackingSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(max_packing(state.range(0)).size);
}
BENCHMARK(BM_PackingSerial)->DenseRange(5, 11, 2)->Unit(benchmark::kMillisecond);

static void BM_PackingParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(max_packing_parallel(state.range(0)).size);
}
BENCHMARK(BM_PackingParallel)->DenseRange(5, 11, 2)->Unit(benchmark::kMillisecond);

static void BM_SearchSerial(benchmark::State& state) {
  const Scheme s = endemic_family(3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(bounded_decomposition_search(s, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SearchSerial)->Arg(8)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_SearchParallel(benchmark::State& state) {
  const Scheme s = endemic_family(3, 5);
  for (auto _ : state)
    benchmark::DoNotOptimize(bounded_decomposition_search_parallel(s, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SearchParallel)->Arg(8)->Arg(14)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
