#ifndef CHEBLAB_POLYNOMIAL_HPP
#define CHEBLAB_POLYNOMIAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cheblab {

/// Monic integer polynomial, coefficients ascending by degree.
class IntPolynomial {
 public:
  /// Throws std::invalid_argument unless the polynomial is monic of degree
  /// >= 1 (after ignoring nothing: the top coefficient must be exactly 1).
  explicit IntPolynomial(std::vector<std::int64_t> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int i) const { return coeffs_[i]; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

/// Raised when a prime hits the excluded locus of a polynomial: p divides the
/// discriminant data (f mod p not squarefree) or p is listed as bad.
class BadPrimeError : public std::runtime_error {
 public:
  explicit BadPrimeError(const std::string& what) : std::runtime_error(what) {}
};

/// Multiset of (degree, count) factor data for a squarefree polynomial over
/// F_p, ascending by degree; sum of degree*count equals the total degree.
struct SplittingType {
  std::vector<std::pair<int, int>> parts;

  int total_degree() const;
  /// Degrees with multiplicity, ascending, e.g. {(1,1),(2,1)} -> [1, 2].
  std::vector<int> expanded() const;
  std::string to_string() const;  // e.g. "1^1 2^1"

  friend bool operator==(const SplittingType& a, const SplittingType& b) = default;
};

/// Largest supported modulus (exclusive): products of two residues must fit
/// the 128-bit intermediates with margin.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t(1) << 40;

/// Arithmetic in F_p[x]; exposed mainly for tests.  Polynomials are coefficient
/// vectors in ascending degree with no trailing zeros ("normalized"); the zero
/// polynomial is the empty vector.
namespace fp {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);  // p prime, a != 0 mod p

using Poly = std::vector<std::uint64_t>;

Poly reduce(const IntPolynomial& f, std::uint64_t p);
int poly_degree(const Poly& a);  // -1 for the zero polynomial
Poly normalize(Poly a);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
Poly rem(Poly a, const Poly& b, std::uint64_t p);
Poly derivative(const Poly& a, std::uint64_t p);
Poly monic(Poly a, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);  // monic (or zero)
/// Quotient a / b when b divides a exactly; throws std::logic_error otherwise.
Poly divide_exact(const Poly& a, const Poly& b, std::uint64_t p);
/// base^exp mod (m, p) by binary exponentiation.
Poly pow_mod(const Poly& base, std::uint64_t exp, const Poly& m, std::uint64_t p);

}  // namespace fp

/// Distinct-degree factor degrees of f mod p.  Requires p prime, p <
/// kMaxModulus, and f mod p squarefree of full degree; otherwise throws
/// BadPrimeError ("ramified/bad prime").  Only degrees are computed; no
/// equal-degree refinement.
SplittingType ddf_degrees(const IntPolynomial& f, std::uint64_t p);

/// Degrees d (ascending, with multiplicity) of the irreducible factors of
/// g mod p whose prime-power norm p^d stays <= x.  Same bad-prime screening
/// as ddf_degrees.
std::vector<int> prime_power_norm_degrees(const IntPolynomial& g, std::uint64_t p,
                                          std::uint64_t x);

/// Exact integer discriminant for degree <= 5 (via the Sylvester resultant of
/// f and f', fraction-free).  Throws std::invalid_argument for higher degrees,
/// std::overflow_error if the value leaves the 64-bit range.
std::int64_t discriminant(const IntPolynomial& f);

/// Distinct prime factors of |n| in ascending order (|n| <= ~1e18; trial
/// division).  n = 0 is rejected.
std::vector<std::uint64_t> prime_factors(std::int64_t n);

}  // namespace cheblab

#endif
