#include <benchmark/benchmark.h>

#include "cheblab/catalog.hpp"
#include "cheblab/polynomial.hpp"
#include "cheblab/sieve.hpp"

namespace {

const cheblab::IntPolynomial& poly_for(int degree) {
  using cheblab::IntPolynomial;
  static const IntPolynomial cubic({-2, 0, 0, 1});
  static const IntPolynomial quartic({-1, -1, 0, 0, 1});
  static const IntPolynomial quintic({-1, -1, 0, 0, 0, 1});
  switch (degree) {
    case 3: return cubic;
    case 4: return quartic;
    default: return quintic;
  }
}

}  // namespace

static void BM_DistinctDegreeFactorization(benchmark::State& state) {
  const auto& f = poly_for(static_cast<int>(state.range(0)));
  const auto primes = cheblab::primes_up_to(2000);
  for (auto _ : state) {
    for (std::uint64_t p : primes) {
      if (p < 5) continue;
      try {
        benchmark::DoNotOptimize(cheblab::ddf_degrees(f, p));
      } catch (const cheblab::BadPrimeError&) {
      }
    }
  }
  state.SetItemsProcessed(state.iterations() * primes.size());
}
BENCHMARK(BM_DistinctDegreeFactorization)->Arg(3)->Arg(4)->Arg(5);

static void BM_FrobeniusResolution(benchmark::State& state) {
  const auto& entry = cheblab::find_entry(cheblab::builtin_catalog(), "s4");
  const auto primes = cheblab::primes_up_to(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    std::size_t acc = 0;
    for (std::uint64_t p : primes) {
      if (entry.is_good_prime(p)) acc += entry.frobenius_class(p);
    }
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * primes.size());
}
BENCHMARK(BM_FrobeniusResolution)->Arg(10000)->Arg(100000);
