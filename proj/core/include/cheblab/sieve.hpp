#ifndef CHEBLAB_SIEVE_HPP
#define CHEBLAB_SIEVE_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

namespace cheblab {

/// Segmented sieve of Eratosthenes over [lo, hi], calling fn(p) for each prime
/// in ascending order.  Memory stays O(sqrt(hi) + segment).
namespace sieve_detail {

/// Base primes <= limit by a plain sieve (also the test oracle's workhorse).
std::vector<std::uint64_t> simple_primes(std::uint64_t limit);

}  // namespace sieve_detail

template <class Fn>
void for_each_prime(std::uint64_t lo, std::uint64_t hi, Fn&& fn) {
  if (hi < 2 || hi < lo) return;
  if (lo < 2) lo = 2;

  std::uint64_t root = 1;
  while ((root + 1) * (root + 1) <= hi) ++root;
  const std::vector<std::uint64_t> base = sieve_detail::simple_primes(root);

  constexpr std::uint64_t kSegment = 1 << 16;
  std::vector<char> is_prime(kSegment);
  for (std::uint64_t low = lo; low <= hi; low += kSegment) {
    const std::uint64_t high = std::min(hi, low + kSegment - 1);
    const std::uint64_t len = high - low + 1;
    std::fill(is_prime.begin(), is_prime.begin() + len, 1);
    for (std::uint64_t p : base) {
      if (p * p > high) break;
      std::uint64_t start = std::max(p * p, ((low + p - 1) / p) * p);
      for (std::uint64_t m = start; m <= high; m += p) is_prime[m - low] = 0;
    }
    for (std::uint64_t n = low; n <= high; ++n) {
      if (is_prime[n - low]) fn(n);
    }
  }
}

/// All primes <= limit (ascending).  limit < 2 gives an empty list.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// pi(limit).
std::uint64_t count_primes(std::uint64_t limit);

}  // namespace cheblab

#endif
