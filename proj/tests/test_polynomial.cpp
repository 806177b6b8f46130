#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "cheblab/polynomial.hpp"
#include "cheblab/rational.hpp"

using namespace cheblab;

namespace {

// Trial-division factorization oracle over F_p: divides out monic factors of
// ascending degree.  Exponential in the degree, fine for test sizes.
std::vector<int> trial_division_degrees(const IntPolynomial& f, std::uint64_t p) {
  fp::Poly rest = fp::reduce(f, p);
  std::vector<int> degrees;
  for (int d = 1; fp::poly_degree(rest) >= 2 * d; ++d) {
    // All monic polynomials of degree d: p^d coefficient tuples.
    std::uint64_t combos = 1;
    for (int i = 0; i < d; ++i) combos *= p;
    for (std::uint64_t code = 0; code < combos; ++code) {
      fp::Poly candidate(d + 1, 0);
      candidate[d] = 1;
      std::uint64_t c = code;
      for (int i = 0; i < d; ++i) {
        candidate[i] = c % p;
        c /= p;
      }
      while (fp::poly_degree(rest) >= d && fp::rem(rest, candidate, p).empty()) {
        degrees.push_back(d);
        rest = fp::divide_exact(rest, candidate, p);
      }
      if (fp::poly_degree(rest) < 2 * d) break;
    }
  }
  if (fp::poly_degree(rest) > 0) degrees.push_back(fp::poly_degree(rest));
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

bool squarefree_mod(const IntPolynomial& f, std::uint64_t p) {
  fp::Poly fm = fp::reduce(f, p);
  return fp::poly_degree(fp::gcd(fm, fp::derivative(fm, p), p)) == 0;
}

// Determinant of the Sylvester matrix of f and f' by rational Gaussian
// elimination: an independent route to the discriminant.
Rational sylvester_det_rational(const IntPolynomial& f) {
  const int n = f.degree();
  const int size = 2 * n - 1;
  std::vector<std::vector<Rational>> m(size, std::vector<Rational>(size, Rational(0)));
  for (int row = 0; row < n - 1; ++row) {
    for (int k = 0; k <= n; ++k) m[row][row + n - k] = Rational(f.coeff(k));
  }
  for (int row = 0; row < n; ++row) {
    for (int k = 1; k <= n; ++k) m[n - 1 + row][row + n - k] = Rational(k * f.coeff(k));
  }
  Rational det(1);
  for (int col = 0; col < size; ++col) {
    int pivot = -1;
    for (int row = col; row < size; ++row) {
      if (!m[row][col].is_zero()) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int row = col + 1; row < size; ++row) {
      if (m[row][col].is_zero()) continue;
      Rational factor = m[row][col] / m[col][col];
      for (int k = col; k < size; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return det;
}

std::int64_t discriminant_oracle(const IntPolynomial& f) {
  Rational res = sylvester_det_rational(f);
  REQUIRE(res.den() == 1);
  std::int64_t value = res.num();
  const int n = f.degree();
  if ((n * (n - 1) / 2) % 2 == 1) value = -value;
  return value;
}

}  // namespace

TEST_CASE("monic validation") {
  CHECK_THROWS_AS(IntPolynomial({1, 2}), std::invalid_argument);   // 2x + 1
  CHECK_THROWS_AS(IntPolynomial({5}), std::invalid_argument);      // constant
  CHECK(IntPolynomial({-2, 0, 0, 1}).degree() == 3);
}

TEST_CASE("modular arithmetic differential check") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<std::uint64_t> dist(0, (1ull << 40) - 1);
  for (int trial = 0; trial < 5000; ++trial) {
    std::uint64_t p = 2 + dist(rng) % ((1ull << 40) - 2);
    std::uint64_t a = dist(rng) % p;
    std::uint64_t b = dist(rng) % p;
    // Reference via 20-bit limbs using only 64-bit arithmetic.
    std::uint64_t a_hi = a >> 20, a_lo = a & 0xFFFFF;
    std::uint64_t hi = (a_hi % p) * (b % p) % p;
    for (int i = 0; i < 20; ++i) hi = (hi * 2) % p;
    std::uint64_t lo = (a_lo % p) * (b % p) % p;
    CHECK(fp::mulmod(a, b, p) == (hi + lo) % p);
  }
  // powmod / invmod on a large prime.
  const std::uint64_t q = 999999999989ull;
  CHECK(q < kMaxModulus);
  for (int trial = 0; trial < 50; ++trial) {
    std::uint64_t a = 1 + dist(rng) % (q - 1);
    CHECK(fp::mulmod(a, fp::invmod(a, q), q) == 1);
  }
  CHECK(fp::powmod(2, 10, 1000000007ull) == 1024);
}

TEST_CASE("distinct-degree factor degrees of x^3 - 2") {
  const IntPolynomial f({-2, 0, 0, 1});

  SplittingType t5 = ddf_degrees(f, 5);
  CHECK(t5.parts == std::vector<std::pair<int, int>>{{1, 1}, {2, 1}});
  CHECK(t5.expanded() == trial_division_degrees(f, 5));

  SplittingType t31 = ddf_degrees(f, 31);
  CHECK(t31.parts == std::vector<std::pair<int, int>>{{1, 3}});
  CHECK(t31.expanded() == trial_division_degrees(f, 31));

  SplittingType t7 = ddf_degrees(f, 7);
  CHECK(t7.parts == std::vector<std::pair<int, int>>{{3, 1}});
  CHECK(t7.expanded() == trial_division_degrees(f, 7));

  // 2 and 3 divide the discriminant: screened out.
  CHECK_THROWS_AS(ddf_degrees(f, 2), BadPrimeError);
  CHECK_THROWS_AS(ddf_degrees(f, 3), BadPrimeError);
  CHECK_THROWS_AS(ddf_degrees(f, std::uint64_t(1) << 41), std::domain_error);
}

TEST_CASE("factor degrees match trial division on random polynomials") {
  std::mt19937 rng(1337);
  std::uniform_int_distribution<std::int64_t> coeff(-10, 10);
  const std::vector<std::uint64_t> primes{5, 7, 11, 13, 17, 19, 23};
  std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int degree = 1 + trial % 5;
    std::vector<std::int64_t> coeffs(degree + 1);
    for (int i = 0; i < degree; ++i) coeffs[i] = coeff(rng);
    coeffs[degree] = 1;
    IntPolynomial f(std::move(coeffs));
    std::uint64_t p = primes[pick(rng)];
    if (!squarefree_mod(f, p)) {
      CHECK_THROWS_AS(ddf_degrees(f, p), BadPrimeError);
      continue;
    }
    SplittingType type = ddf_degrees(f, p);
    CHECK(type.total_degree() == f.degree());
    CHECK(type.expanded() == trial_division_degrees(f, p));
    ++checked;
  }
  CHECK(checked > 200);
}

TEST_CASE("prime power norms below a bound") {
  const IntPolynomial f({-2, 0, 0, 1});
  CHECK(prime_power_norm_degrees(f, 5, 30) == std::vector<int>{1, 2});
  CHECK(prime_power_norm_degrees(f, 5, 24) == std::vector<int>{1});
  CHECK(prime_power_norm_degrees(f, 31, 31) == std::vector<int>{1, 1, 1});
  CHECK(prime_power_norm_degrees(f, 37, 31).empty());  // p > x
}

TEST_CASE("integer discriminants") {
  const IntPolynomial cbrt2({-2, 0, 0, 1});
  const IntPolynomial quartic({-1, -1, 0, 0, 1});
  const IntPolynomial quintic({-1, -1, 0, 0, 0, 1});
  const IntPolynomial zeta3({1, 1, 1});

  // Closed forms: disc(x^2+bx+c) = b^2-4c, disc(x^3+px+q) = -4p^3-27q^2.
  CHECK(discriminant(zeta3) == 1 - 4);
  CHECK(discriminant(cbrt2) == -27 * 4);

  CHECK(discriminant(quartic) == -283);
  CHECK(discriminant(quintic) == 2869);

  for (const auto& f : {cbrt2, quartic, quintic, zeta3,
                        IntPolynomial({-1, -2, 1, 1}), IntPolynomial({2, 1, 1}),
                        IntPolynomial({-1, 1, 1}), IntPolynomial({1, 1, 1, 1, 1})}) {
    CHECK(discriminant(f) == discriminant_oracle(f));
  }

  CHECK_THROWS_AS(discriminant(IntPolynomial({1, 1, 1, 1, 1, 1, 1})),
                  std::invalid_argument);

  CHECK(prime_factors(-108) == std::vector<std::uint64_t>{2, 3});
  CHECK(prime_factors(2869) == std::vector<std::uint64_t>{19, 151});
  CHECK(prime_factors(283) == std::vector<std::uint64_t>{283});
  CHECK_THROWS_AS(prime_factors(0), std::invalid_argument);
}
