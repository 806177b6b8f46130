#include "cheblab/density.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "cheblab/sieve.hpp"

namespace cheblab {

namespace {

double integrand(double t) { return 1.0 / std::log(t); }

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(double a, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = integrand(lm);
  const double frm = integrand(rm);
  const double left = simpson(a, m, fa, flm, fm);
  const double right = simpson(m, b, fm, frm, fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double li_offset(double x, double tol) {
  if (!(x >= 2.0)) throw std::domain_error("li_offset: x >= 2 required");
  if (x == 2.0) return 0.0;
  const double a = 2.0;
  const double fa = integrand(a);
  const double fb = integrand(x);
  const double fm = integrand(0.5 * (a + x));
  const double whole = simpson(a, x, fa, fm, fb);
  return adaptive_simpson(a, x, fa, fm, fb, whole, tol, 48);
}

std::vector<std::uint64_t> geometric_checkpoints(std::uint64_t x, int count) {
  if (x < 2) throw std::invalid_argument("geometric_checkpoints: x >= 2 required");
  if (count < 1) throw std::invalid_argument("geometric_checkpoints: count >= 1 required");
  const double lo = static_cast<double>(std::min<std::uint64_t>(1000, x));
  const double hi = static_cast<double>(x);
  std::vector<std::uint64_t> points;
  for (int i = 0; i < count; ++i) {
    double t = (count == 1) ? 1.0 : static_cast<double>(i) / (count - 1);
    double value = std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)));
    auto rounded = static_cast<std::uint64_t>(std::llround(value));
    points.push_back(std::clamp<std::uint64_t>(rounded, 2, x));
  }
  points.back() = x;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

namespace {

/// Index of the first checkpoint >= value (value <= checkpoints.back()).
std::size_t bucket_of(const std::vector<std::uint64_t>& checkpoints, std::uint64_t value) {
  return static_cast<std::size_t>(
      std::lower_bound(checkpoints.begin(), checkpoints.end(), value) -
      checkpoints.begin());
}

struct BlockRange {
  std::uint64_t lo;
  std::uint64_t hi;
};

std::vector<BlockRange> split_range(std::uint64_t x, int workers) {
  workers = std::max(workers, 1);
  const std::uint64_t span = x - 1;  // numbers 2..x
  std::vector<BlockRange> blocks;
  for (int w = 0; w < workers; ++w) {
    std::uint64_t lo = 2 + span * static_cast<std::uint64_t>(w) / workers;
    std::uint64_t hi = 1 + span * static_cast<std::uint64_t>(w + 1) / workers;
    if (lo <= hi) blocks.push_back({lo, hi});
  }
  return blocks;
}

/// Runs fn over each block (possibly concurrently), then merges the per-block
/// accumulators into `result` in block order.  Accumulator must support
/// merge-by-addition via the supplied merge callable.
template <class Acc, class MakeAcc, class PerBlock, class Merge>
void parallel_blocks(std::uint64_t x, int workers, MakeAcc make, PerBlock fn, Merge merge,
                     Acc& result) {
  std::vector<BlockRange> blocks = split_range(x, workers);
  std::vector<Acc> partial;
  partial.reserve(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) partial.push_back(make());

  if (blocks.size() == 1) {
    fn(blocks[0], partial[0]);
  } else {
    std::vector<std::exception_ptr> errors(blocks.size());
    std::vector<std::thread> threads;
    threads.reserve(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      threads.emplace_back([&, i] {
        try {
          fn(blocks[i], partial[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  for (auto& acc : partial) merge(result, acc);
}

}  // namespace

EntryScan::EntryScan(const FieldDescriptor& entry, const ScanOptions& options)
    : entry_(&entry) {
  if (options.x < 2) throw std::invalid_argument("EntryScan: x >= 2 required");
  checkpoints_ = geometric_checkpoints(options.x, options.checkpoint_count);
  li_.reserve(checkpoints_.size());
  for (std::uint64_t c : checkpoints_) {
    li_.push_back(li_offset(static_cast<double>(c)));
  }

  const std::size_t classes = entry.group->class_count();
  const std::size_t k = checkpoints_.size();
  using Matrix = std::vector<std::vector<std::uint64_t>>;
  counts_.assign(classes, std::vector<std::uint64_t>(k, 0));
  parallel_blocks<Matrix>(
      options.x, options.workers,
      [&] { return Matrix(classes, std::vector<std::uint64_t>(k, 0)); },
      [&](const BlockRange& block, Matrix& local) {
        for_each_prime(block.lo, block.hi, [&](std::uint64_t p) {
          if (!entry_->is_good_prime(p)) return;
          std::size_t c = entry_->frobenius_class(p);
          ++local[c][bucket_of(checkpoints_, p)];
        });
      },
      [](Matrix& into, const Matrix& from) {
        for (std::size_t c = 0; c < into.size(); ++c) {
          for (std::size_t j = 0; j < into[c].size(); ++j) into[c][j] += from[c][j];
        }
      },
      counts_);
  // Bucket counts -> cumulative counts.
  for (auto& row : counts_) {
    for (std::size_t j = 1; j < row.size(); ++j) row[j] += row[j - 1];
  }
}

std::uint64_t EntryScan::good_prime_count(std::size_t checkpoint_index) const {
  std::uint64_t sum = 0;
  for (const auto& row : counts_) sum += row[checkpoint_index];
  return sum;
}

ConvergenceSeries EntryScan::series_from_coefficients(
    std::string label, const std::vector<Rational>& coeff,
    std::optional<Rational> theoretical) const {
  ConvergenceSeries series;
  series.label = std::move(label);
  series.checkpoints = checkpoints_;
  series.theoretical = std::move(theoretical);
  series.values.reserve(checkpoints_.size());
  for (std::size_t j = 0; j < checkpoints_.size(); ++j) {
    Rational sum(0);
    for (std::size_t c = 0; c < coeff.size(); ++c) {
      if (coeff[c].is_zero()) continue;
      sum += coeff[c] * Rational(static_cast<std::int64_t>(counts_[c][j]));
    }
    const double li = li_[j];
    series.values.push_back({sum, li, sum.to_double() / li});
  }
  return series;
}

ConvergenceSeries EntryScan::gamma(std::size_t class_id) const {
  std::vector<Rational> coeff(entry_->group->class_count());
  coeff[class_id] = Rational(1);
  Rational theoretical(static_cast<std::int64_t>(entry_->group->class_size(class_id)),
                       static_cast<std::int64_t>(entry_->group->order()));
  return series_from_coefficients(entry_->class_label(class_id), coeff, theoretical);
}

std::vector<ConvergenceSeries> EntryScan::gamma_all() const {
  std::vector<ConvergenceSeries> out;
  out.reserve(entry_->group->class_count());
  for (std::size_t c = 0; c < entry_->group->class_count(); ++c) out.push_back(gamma(c));
  return out;
}

std::vector<Rational> fixed_coset_coefficients(const FieldDescriptor& entry,
                                               const Subgroup& h,
                                               const ClassFunction& phi) {
  if (phi.group_ref().get() != &h.group()) {
    throw std::invalid_argument("fixed_coset_coefficients: phi not defined on H");
  }
  if (h.parent_ref().get() != entry.group.get()) {
    throw std::invalid_argument("fixed_coset_coefficients: H not a subgroup of the entry group");
  }
  std::vector<Rational> coeff(entry.group->class_count());
  for (std::size_t c = 0; c < coeff.size(); ++c) {
    Rational sum(0);
    for (const auto& t : h.fixed_coset_conjugates(entry.group->class_representative(c))) {
      sum += phi(t);
    }
    coeff[c] = sum;
  }
  return coeff;
}

ConvergenceSeries EntryScan::expectation_E(const Subgroup& h,
                                           const ClassFunction& phi) const {
  return series_from_coefficients("E-side", fixed_coset_coefficients(*entry_, h, phi),
                                  phi.mean());
}

ConvergenceSeries EntryScan::expectation_K(const ClassFunction& phi_g) const {
  if (phi_g.group_ref().get() != entry_->group.get()) {
    throw std::invalid_argument("expectation_K: phi not defined on the entry group");
  }
  return series_from_coefficients("K-side", phi_g.class_values(), phi_g.mean());
}

ConvergenceSeries gamma_series(const FieldDescriptor& entry, std::size_t class_id,
                               const ScanOptions& options) {
  return EntryScan(entry, options).gamma(class_id);
}

std::vector<ConvergenceSeries> gamma_series_all(const FieldDescriptor& entry,
                                                const ScanOptions& options) {
  return EntryScan(entry, options).gamma_all();
}

ConvergenceSeries expectation_E(const FieldDescriptor& entry, const Subgroup& h,
                                const ClassFunction& phi, const ScanOptions& options) {
  return EntryScan(entry, options).expectation_E(h, phi);
}

ConvergenceSeries expectation_K(const FieldDescriptor& entry, const ClassFunction& phi_g,
                                const ScanOptions& options) {
  return EntryScan(entry, options).expectation_K(phi_g);
}

ConvergenceSeries expectation_E_independent(const FieldDescriptor& entry,
                                            const SubfieldDescriptor& subfield,
                                            const ScanOptions& options) {
  if (!subfield.subfield_poly) {
    throw std::invalid_argument("expectation_E_independent: subfield \"" + subfield.name +
                                "\" of entry " + entry.name + " has no subfieldPoly");
  }
  if (options.x < 2) throw std::invalid_argument("expectation_E_independent: x >= 2");
  const IntPolynomial& g = *subfield.subfield_poly;
  const std::vector<std::uint64_t> checkpoints =
      geometric_checkpoints(options.x, options.checkpoint_count);
  const std::size_t k = checkpoints.size();

  using Buckets = std::vector<std::uint64_t>;
  Buckets buckets(k, 0);
  parallel_blocks<Buckets>(
      options.x, options.workers, [&] { return Buckets(k, 0); },
      [&](const BlockRange& block, Buckets& local) {
        for_each_prime(block.lo, block.hi, [&](std::uint64_t p) {
          if (!entry.is_good_prime(p)) return;
          for (int d : prime_power_norm_degrees(g, p, options.x)) {
            std::uint64_t norm = 1;
            for (int i = 0; i < d; ++i) norm *= p;
            ++local[bucket_of(checkpoints, norm)];
          }
        });
      },
      [](Buckets& into, const Buckets& from) {
        for (std::size_t j = 0; j < into.size(); ++j) into[j] += from[j];
      },
      buckets);
  for (std::size_t j = 1; j < k; ++j) buckets[j] += buckets[j - 1];

  ConvergenceSeries series;
  series.label = "E-full-norm";
  series.checkpoints = checkpoints;
  series.theoretical = Rational(1);
  series.values.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    Rational sum(static_cast<std::int64_t>(buckets[j]));
    double li = li_offset(static_cast<double>(checkpoints[j]));
    series.values.push_back({sum, li, sum.to_double() / li});
  }
  return series;
}

namespace {

double truncated_dirichlet(const FieldDescriptor& entry, const std::vector<double>& coeff,
                           double s, std::uint64_t cutoff) {
  double sum = 0.0;
  for_each_prime(2, cutoff, [&](std::uint64_t p) {
    if (!entry.is_good_prime(p)) return;
    const double c = coeff[entry.frobenius_class(p)];
    if (c != 0.0) sum += c * std::pow(static_cast<double>(p), -s);
  });
  return sum / (-std::log(s - 1.0));
}

std::vector<double> to_doubles(const std::vector<Rational>& values) {
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i].to_double();
  return out;
}

}  // namespace

double analytic_expectation(const FieldDescriptor& entry, const ClassFunction& phi_g,
                            double s, std::uint64_t cutoff) {
  if (!(s > 1.0)) throw std::domain_error("analytic_expectation: s > 1 required");
  if (cutoff < 2) throw std::domain_error("analytic_expectation: cutoff >= 2 required");
  if (phi_g.group_ref().get() != entry.group.get()) {
    throw std::invalid_argument("analytic_expectation: phi not defined on the entry group");
  }
  return truncated_dirichlet(entry, to_doubles(phi_g.class_values()), s, cutoff);
}

AnalyticPoint analytic_pair(const FieldDescriptor& entry, const Subgroup& h,
                            const ClassFunction& phi, double s, std::uint64_t cutoff) {
  if (!(s > 1.0)) throw std::domain_error("analytic_pair: s > 1 required");
  const std::vector<Rational> e_coeff = fixed_coset_coefficients(entry, h, phi);
  const ClassFunction induced = induce(h, phi);
  const std::vector<Rational>& k_coeff = induced.class_values();

  AnalyticPoint point;
  point.s = s;
  point.theoretical = phi.mean();
  point.termwise_equal = (e_coeff == k_coeff);
  point.e_side = truncated_dirichlet(entry, to_doubles(e_coeff), s, cutoff);
  point.k_side = truncated_dirichlet(entry, to_doubles(k_coeff), s, cutoff);
  return point;
}

std::string format_double(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                 std::chars_format::general, 10);
  return std::string(buffer, ptr);
}

void write_series_csv(std::ostream& os, std::span<const ConvergenceSeries> series) {
  os << "x,label,exact_sum,li_x,ratio,theoretical,abs_error\n";
  for (const auto& s : series) {
    for (std::size_t j = 0; j < s.checkpoints.size(); ++j) {
      const CheckpointValue& v = s.values[j];
      os << s.checkpoints[j] << ',' << s.label << ',' << v.exact_sum.to_string() << ','
         << format_double(v.li_value) << ',' << format_double(v.ratio) << ',';
      if (s.theoretical) {
        os << s.theoretical->to_string() << ','
           << format_double(std::abs(v.ratio - s.theoretical->to_double()));
      } else {
        os << ',';
      }
      os << '\n';
    }
  }
}

}  // namespace cheblab
