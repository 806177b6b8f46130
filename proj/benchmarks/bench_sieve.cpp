#include <benchmark/benchmark.h>

#include "cheblab/sieve.hpp"

static void BM_SegmentedSieve(benchmark::State& state) {
  const std::uint64_t limit = state.range(0);
  for (auto _ : state) {
    std::uint64_t count = 0;
    cheblab::for_each_prime(2, limit, [&](std::uint64_t) { ++count; });
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() * limit);
}
BENCHMARK(BM_SegmentedSieve)->Arg(100000)->Arg(1000000)->Arg(10000000);
