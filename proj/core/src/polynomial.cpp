#include "cheblab/polynomial.hpp"

#include <algorithm>
#include <limits>

namespace cheblab {

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) {
    throw std::invalid_argument("IntPolynomial: degree >= 1 required");
  }
  if (coeffs_.back() != 1) {
    throw std::invalid_argument("IntPolynomial: monic polynomial required");
  }
}

int SplittingType::total_degree() const {
  int sum = 0;
  for (auto [d, m] : parts) sum += d * m;
  return sum;
}

std::vector<int> SplittingType::expanded() const {
  std::vector<int> degrees;
  for (auto [d, m] : parts) {
    for (int i = 0; i < m; ++i) degrees.push_back(d);
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

std::string SplittingType::to_string() const {
  std::string out;
  for (auto [d, m] : parts) {
    if (!out.empty()) out += ' ';
    out += std::to_string(d) + "^" + std::to_string(m);
  }
  return out.empty() ? "-" : out;
}

namespace fp {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) acc = mulmod(acc, base, p);
    base = mulmod(base, base, p);
    exp >>= 1;
  }
  return acc;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  return powmod(a % p, p - 2, p);  // Fermat; p prime
}

Poly reduce(const IntPolynomial& f, std::uint64_t p) {
  Poly out(f.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::int64_t c = f.coeff(static_cast<int>(i)) % static_cast<std::int64_t>(p);
    if (c < 0) c += static_cast<std::int64_t>(p);
    out[i] = static_cast<std::uint64_t>(c);
  }
  return normalize(std::move(out));
}

int poly_degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly normalize(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % p;
    }
  }
  return normalize(std::move(out));
}

Poly rem(Poly a, const Poly& b, std::uint64_t p) {
  if (b.empty()) throw std::invalid_argument("fp::rem: division by zero polynomial");
  const std::uint64_t lead_inv = invmod(b.back(), p);
  while (a.size() >= b.size()) {
    std::uint64_t q = mulmod(a.back(), lead_inv, p);
    if (q != 0) {
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        std::uint64_t sub = mulmod(q, b[i], p);
        std::uint64_t& tgt = a[shift + i];
        tgt = (tgt >= sub) ? tgt - sub : tgt + p - sub;
      }
    }
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

Poly derivative(const Poly& a, std::uint64_t p) {
  if (a.size() <= 1) return {};
  Poly out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) {
    out[i - 1] = mulmod(a[i], i % p, p);
  }
  return normalize(std::move(out));
}

Poly monic(Poly a, std::uint64_t p) {
  if (a.empty() || a.back() == 1) return a;
  const std::uint64_t inv = invmod(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
  return a;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  a = normalize(std::move(a));
  b = normalize(std::move(b));
  while (!b.empty()) {
    Poly r = rem(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a), p);
}

Poly divide_exact(const Poly& a, const Poly& b, std::uint64_t p) {
  if (b.empty()) throw std::invalid_argument("fp::divide_exact: zero divisor");
  Poly r = a;
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const std::uint64_t lead_inv = invmod(b.back(), p);
  while (r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    std::uint64_t c = mulmod(r.back(), lead_inv, p);
    q[shift] = c;
    if (c != 0) {
      for (std::size_t i = 0; i < b.size(); ++i) {
        std::uint64_t sub = mulmod(c, b[i], p);
        std::uint64_t& tgt = r[shift + i];
        tgt = (tgt >= sub) ? tgt - sub : tgt + p - sub;
      }
    }
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  if (!r.empty()) throw std::logic_error("fp::divide_exact: nonzero remainder");
  return normalize(std::move(q));
}

Poly pow_mod(const Poly& base, std::uint64_t exp, const Poly& m, std::uint64_t p) {
  Poly acc{1};
  Poly b = rem(base, m, p);
  while (exp > 0) {
    if (exp & 1) acc = rem(mul(acc, b, p), m, p);
    b = rem(mul(b, b, p), m, p);
    exp >>= 1;
  }
  return acc;
}

}  // namespace fp

namespace {

void check_modulus(std::uint64_t p) {
  if (p < 2 || p >= kMaxModulus) {
    throw std::domain_error("modulus outside supported range [2, 2^40)");
  }
}

}  // namespace

SplittingType ddf_degrees(const IntPolynomial& f, std::uint64_t p) {
  check_modulus(p);
  fp::Poly fp_poly = fp::reduce(f, p);
  if (fp::poly_degree(fp_poly) != f.degree()) {
    // Cannot happen for a monic f, but keep the guard against future callers.
    throw BadPrimeError("ddf_degrees: degree drop mod " + std::to_string(p));
  }

  // Squarefreeness screen: gcd(f, f') must be 1 even for primes claimed good.
  fp::Poly d = fp::derivative(fp_poly, p);
  fp::Poly g = fp::gcd(fp_poly, d, p);
  if (fp::poly_degree(g) != 0) {
    throw BadPrimeError("ramified/bad prime " + std::to_string(p) +
                        ": polynomial not squarefree mod p");
  }

  SplittingType result;
  fp::Poly rest = std::move(fp_poly);
  fp::Poly x{0, 1};
  fp::Poly h = fp::rem(x, rest, p);  // x^(p^0) = x mod rest
  int degree = 0;
  while (fp::poly_degree(rest) >= 2 * (degree + 1)) {
    ++degree;
    h = fp::pow_mod(h, p, rest, p);  // now x^(p^degree) mod rest
    // gcd(h - x, rest) collects all irreducible factors of degree `degree`.
    fp::Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] >= 1) ? diff[1] - 1 : p - 1;
    diff = fp::normalize(std::move(diff));
    fp::Poly factor = fp::gcd(diff, rest, p);
    const int fdeg = fp::poly_degree(factor);
    if (fdeg > 0) {
      result.parts.emplace_back(degree, fdeg / degree);
      // Divide rest by the degree-d part; h stays valid modulo the quotient.
      rest = fp::divide_exact(rest, factor, p);
      h = fp::rem(std::move(h), rest, p);
    }
  }
  if (fp::poly_degree(rest) > 0) {
    result.parts.emplace_back(fp::poly_degree(rest), 1);
  }
  std::sort(result.parts.begin(), result.parts.end());
  return result;
}

std::vector<int> prime_power_norm_degrees(const IntPolynomial& g, std::uint64_t p,
                                          std::uint64_t x) {
  std::vector<int> out;
  for (int d : ddf_degrees(g, p).expanded()) {
    unsigned __int128 norm = 1;
    bool fits = true;
    for (int i = 0; i < d; ++i) {
      norm *= p;
      if (norm > x) {
        fits = false;
        break;
      }
    }
    if (fits) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using Wide = __int128;

std::int64_t narrow_or_throw(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("discriminant: value exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

// Fraction-free (Bareiss) determinant of a small integer matrix.
Wide bareiss_determinant(std::vector<std::vector<Wide>> m) {
  const std::size_t n = m.size();
  Wide sign = 1;
  Wide prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

std::int64_t discriminant(const IntPolynomial& f) {
  const int n = f.degree();
  if (n > 5) {
    throw std::invalid_argument("discriminant: exact computation limited to degree <= 5");
  }
  // Sylvester matrix of f (degree n) and f' (degree n-1): (2n-1) x (2n-1).
  const int size = 2 * n - 1;
  std::vector<std::vector<Wide>> m(size, std::vector<Wide>(size, 0));
  for (int row = 0; row < n - 1; ++row) {  // rows of f
    for (int k = 0; k <= n; ++k) m[row][row + n - k] = f.coeff(k);
  }
  for (int row = 0; row < n; ++row) {  // rows of f'
    for (int k = 1; k <= n; ++k) {
      m[n - 1 + row][row + n - k] = static_cast<Wide>(k) * f.coeff(k);
    }
  }
  Wide res = bareiss_determinant(std::move(m));
  // disc = (-1)^(n(n-1)/2) * Res(f, f') / lc(f); lc = 1.
  if (((static_cast<long long>(n) * (n - 1)) / 2) % 2 == 1) res = -res;
  return narrow_or_throw(res);
}

std::vector<std::uint64_t> prime_factors(std::int64_t n) {
  if (n == 0) throw std::invalid_argument("prime_factors: zero has no factorization");
  std::uint64_t v = static_cast<std::uint64_t>(n < 0 ? -n : n);
  std::vector<std::uint64_t> factors;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p == 0) {
      factors.push_back(p);
      while (v % p == 0) v /= p;
    }
  }
  if (v > 1) factors.push_back(v);
  return factors;
}

}  // namespace cheblab
