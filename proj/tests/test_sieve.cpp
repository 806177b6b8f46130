#include <doctest.h>

#include <vector>

#include "cheblab/sieve.hpp"

using namespace cheblab;

TEST_CASE("small prime lists") {
  CHECK(primes_up_to(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(2) == std::vector<std::uint64_t>{2});
  CHECK(primes_up_to(3) == std::vector<std::uint64_t>{2, 3});
}

TEST_CASE("segmented sieve equals the simple sieve") {
  const auto simple = sieve_detail::simple_primes(300000);
  CHECK(primes_up_to(300000) == simple);
}

TEST_CASE("prime counting at one million") {
  CHECK(count_primes(1000000) == 78498);
  CHECK(sieve_detail::simple_primes(1000000).size() == 78498);
}

TEST_CASE("range splitting covers every prime exactly once") {
  const auto whole = primes_up_to(100000);
  for (std::uint64_t split : {2ull, 3ull, 1000ull, 65536ull, 99991ull}) {
    std::vector<std::uint64_t> pieces;
    for_each_prime(2, split, [&](std::uint64_t p) { pieces.push_back(p); });
    for_each_prime(split + 1, 100000, [&](std::uint64_t p) { pieces.push_back(p); });
    CHECK(pieces == whole);
  }
}
