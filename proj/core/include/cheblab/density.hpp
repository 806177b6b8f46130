#ifndef CHEBLAB_DENSITY_HPP
#define CHEBLAB_DENSITY_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cheblab/catalog.hpp"
#include "cheblab/class_function.hpp"
#include "cheblab/rational.hpp"

namespace cheblab {

/// Offset logarithmic integral: integral of dt/log t from 2 to x, by adaptive
/// Simpson quadrature to absolute accuracy `tol`.  Deterministic.  Throws
/// std::domain_error for x < 2.
double li_offset(double x, double tol = 1e-9);

/// `count` geometrically spaced checkpoints from min(1000, x) to x, rounded,
/// deduplicated ascending; the last checkpoint is always exactly x.
std::vector<std::uint64_t> geometric_checkpoints(std::uint64_t x, int count = 20);

struct CheckpointValue {
  Rational exact_sum;  // exact rational accumulation up to the checkpoint
  double li_value;     // li_offset(checkpoint)
  double ratio;        // exact_sum / li_value, evaluated at output time only
};

struct ConvergenceSeries {
  std::string label;
  std::vector<std::uint64_t> checkpoints;
  std::vector<CheckpointValue> values;
  std::optional<Rational> theoretical;  // limit claimed by theory, when known

  const CheckpointValue& final_value() const { return values.back(); }
};

struct ScanOptions {
  std::uint64_t x = 100000;  // inclusive prime bound (>= 2)
  int checkpoint_count = 20;
  int workers = 1;
};

/// One pass over the good primes p <= x of an entry, bucketing the count of
/// each Frobenius class per checkpoint.  All estimators below are exact linear
/// combinations of these counts, so a scan can be shared between estimators.
/// The prime range is split into `workers` contiguous blocks processed
/// concurrently; block results are merged deterministically (integer adds),
/// so results are identical for any worker count.
class EntryScan {
 public:
  EntryScan(const FieldDescriptor& entry, const ScanOptions& options);

  const FieldDescriptor& entry() const { return *entry_; }
  const std::vector<std::uint64_t>& checkpoints() const { return checkpoints_; }
  const std::vector<double>& li_values() const { return li_; }

  /// Cumulative count of good primes p <= checkpoint with Frobenius class c.
  std::uint64_t class_count(std::size_t class_id, std::size_t checkpoint_index) const {
    return counts_[class_id][checkpoint_index];
  }
  std::uint64_t good_prime_count(std::size_t checkpoint_index) const;

  /// Series with exact sums  sum_C coeff[C] * class_count(C, j).
  ConvergenceSeries series_from_coefficients(std::string label,
                                             const std::vector<Rational>& coeff,
                                             std::optional<Rational> theoretical) const;

  ConvergenceSeries gamma(std::size_t class_id) const;
  std::vector<ConvergenceSeries> gamma_all() const;

  /// E-side estimator: per prime adds sum of phi over the fixed-coset
  /// conjugates of the Frobenius (= degree-one primes of E above p).
  ConvergenceSeries expectation_E(const Subgroup& h, const ClassFunction& phi) const;

  /// K-side estimator: per prime adds phi_g at the Frobenius class.
  ConvergenceSeries expectation_K(const ClassFunction& phi_g) const;

 private:
  const FieldDescriptor* entry_;
  std::vector<std::uint64_t> checkpoints_;
  std::vector<double> li_;
  std::vector<std::vector<std::uint64_t>> counts_;  // [class][checkpoint], cumulative
};

/// Per-class E-side coefficients: coeff[C] = sum of phi over
/// fixed_coset_conjugates(G, H, rep(C)).  Class-invariant by construction.
std::vector<Rational> fixed_coset_coefficients(const FieldDescriptor& entry,
                                               const Subgroup& h,
                                               const ClassFunction& phi);

// Convenience single-shot forms of the estimators.
ConvergenceSeries gamma_series(const FieldDescriptor& entry, std::size_t class_id,
                               const ScanOptions& options);
std::vector<ConvergenceSeries> gamma_series_all(const FieldDescriptor& entry,
                                                const ScanOptions& options);
ConvergenceSeries expectation_E(const FieldDescriptor& entry, const Subgroup& h,
                                const ClassFunction& phi, const ScanOptions& options);
ConvergenceSeries expectation_K(const FieldDescriptor& entry, const ClassFunction& phi_g,
                                const ScanOptions& options);

/// Group-theory-free estimator from the subfield polynomial alone: counts all
/// primes of E with norm p^d <= checkpoint over good p (every inertia degree,
/// not just one).  Requires subfield_poly; theoretical limit is 1.
ConvergenceSeries expectation_E_independent(const FieldDescriptor& entry,
                                            const SubfieldDescriptor& subfield,
                                            const ScanOptions& options);

/// Truncated Dirichlet-series estimator of the analytic density:
/// sum over good p <= cutoff of phi_g(s_p) p^-s, divided by -log(s-1).
/// Throws std::domain_error for s <= 1.
double analytic_expectation(const FieldDescriptor& entry, const ClassFunction& phi_g,
                            double s, std::uint64_t cutoff);

struct AnalyticPoint {
  double s;
  double e_side;         // fixed-coset route, normalized by -log(s-1)
  double k_side;         // induced-class-function route
  Rational theoretical;  // mean of phi over H
  bool termwise_equal;   // per-class coefficients agree exactly
};

/// Both sides of the analytic identity for one (H, phi) at one s.  Terms are
/// accumulated in the same fixed order on both sides, so termwise_equal
/// implies bitwise-equal sums.
AnalyticPoint analytic_pair(const FieldDescriptor& entry, const Subgroup& h,
                            const ClassFunction& phi, double s, std::uint64_t cutoff);

/// Chebotarev densities by induction on element order.  Classes are processed
/// by increasing order n of their canonical representatives sigma; for each,
///   d(C) = oracle(<sigma>, phi_sigma) - sum over divisors e of n, e > 1,
///          of d(class of sigma^e)
/// where phi_sigma comes from sigma_phi.  With the exact oracle
/// (h, phi) -> phi.mean() the output is |C|/|G| for every class; an empirical
/// oracle may return double-valued estimates instead.
template <class Value, class Oracle>
std::vector<Value> cyclic_reduction(const GroupRef& g, Oracle&& oracle) {
  const std::size_t class_count = g->class_count();
  std::vector<Value> density(class_count);
  std::vector<std::pair<std::uint64_t, std::size_t>> by_order;
  by_order.reserve(class_count);
  for (std::size_t c = 0; c < class_count; ++c) {
    by_order.emplace_back(g->class_representative(c).order(), c);
  }
  std::sort(by_order.begin(), by_order.end());
  for (auto [n, c] : by_order) {
    CyclicInductionData data = sigma_phi(g, g->class_representative(c));
    Value value = oracle(data.subgroup, data.phi);
    for (std::uint64_t e = 2; e <= n; ++e) {
      if (n % e != 0) continue;
      value -= density[g->power_class(c, e)];
    }
    density[c] = value;
  }
  return density;
}

/// Series CSV: header row then one row per (label, checkpoint):
/// x,label,exact_sum,li_x,ratio,theoretical,abs_error with exact sums as
/// "num/den" and empty theoretical/abs_error when no limit is attached.
void write_series_csv(std::ostream& os, std::span<const ConvergenceSeries> series);

/// Locale-independent shortest-ish decimal form (10 significant digits).
std::string format_double(double value);

}  // namespace cheblab

#endif
