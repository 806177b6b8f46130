#include "cheblab/sieve.hpp"

#include <algorithm>

namespace cheblab {

namespace sieve_detail {

std::vector<std::uint64_t> simple_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<char> composite(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return primes;
}

}  // namespace sieve_detail

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  for_each_prime(2, limit, [&](std::uint64_t p) { primes.push_back(p); });
  return primes;
}

std::uint64_t count_primes(std::uint64_t limit) {
  std::uint64_t count = 0;
  for_each_prime(2, limit, [&](std::uint64_t) { ++count; });
  return count;
}

}  // namespace cheblab
