#include <benchmark/benchmark.h>

#include "cheblab/class_function.hpp"
#include "cheblab/group.hpp"

namespace {

cheblab::GroupRef symmetric_group(int n) {
  std::vector<int> cycle(n);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return cheblab::make_group({cheblab::Permutation(cycle),
                              cheblab::parse_cycles("(1 2)", n)});
}

}  // namespace

static void BM_GenerateSymmetricGroup(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(symmetric_group(n));
  }
}
BENCHMARK(BM_GenerateSymmetricGroup)->Arg(4)->Arg(5)->Arg(6);

static void BM_Induce(benchmark::State& state) {
  auto g = symmetric_group(static_cast<int>(state.range(0)));
  cheblab::Subgroup h(g, {cheblab::parse_cycles("(1 2)", g->degree())});
  auto phi = cheblab::ClassFunction::indicator(h.group_ref(), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cheblab::induce(h, phi));
  }
}
BENCHMARK(BM_Induce)->Arg(4)->Arg(5);

static void BM_AllSubgroups(benchmark::State& state) {
  auto g = symmetric_group(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cheblab::all_subgroup_element_sets(*g));
  }
}
BENCHMARK(BM_AllSubgroups)->Arg(4)->Arg(5);
