#include "cheblab/commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "cheblab/catalog.hpp"
#include "cheblab/class_function.hpp"
#include "cheblab/density.hpp"
#include "cheblab/group.hpp"
#include "cheblab/polynomial.hpp"
#include "cheblab/sieve.hpp"

namespace cheblab::cli {

namespace {

std::vector<FieldDescriptor> load_config_catalog(const RunConfig& config) {
  if (config.catalog == "builtin") return builtin_catalog();
  return load_catalog_file(config.catalog);
}

const FieldDescriptor& require_entry(const std::vector<FieldDescriptor>& catalog,
                                     const RunConfig& config) {
  if (config.entry.empty()) throw UsageError("--entry is required");
  try {
    return find_entry(catalog, config.entry);
  } catch (const CatalogError& e) {
    throw UsageError(e.what());
  }
}

ScanOptions scan_options(const RunConfig& config) {
  if (config.x < 2) throw UsageError("--x must be >= 2");
  if (config.checkpoints < 1) throw UsageError("--checkpoints must be >= 1");
  if (config.workers < 1) throw UsageError("--workers must be >= 1");
  return ScanOptions{config.x, config.checkpoints, config.workers};
}

/// Runs `body(stream)` against --out: a file when a path is given, otherwise
/// the provided default stream.
int with_output(const RunConfig& config, std::ostream& fallback,
                const std::function<int(std::ostream&)>& body) {
  if (config.out == "-" || config.out.empty()) return body(fallback);
  std::ofstream file(config.out);
  if (!file) throw UsageError("cannot open output file: " + config.out);
  return body(file);
}

ClassFunction parse_phi(const std::string& spec, const Subgroup& h) {
  if (spec == "one") return ClassFunction::one(h.group_ref());
  if (spec == "zero") return ClassFunction::zero(h.group_ref());
  if (spec.rfind("delta:", 0) == 0) {
    Permutation p;
    try {
      p = parse_cycles(spec.substr(6), h.parent().degree());
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("bad --phi delta element: ") + e.what());
    }
    if (!h.contains(p)) {
      throw UsageError("--phi delta element " + format_cycles(p) + " is not in the subgroup");
    }
    return ClassFunction::delta_at(h.group_ref(), p);
  }
  if (spec.rfind("indicator:", 0) == 0) {
    std::size_t class_id = 0;
    try {
      class_id = std::stoul(spec.substr(10));
    } catch (const std::exception&) {
      throw UsageError("bad --phi indicator index");
    }
    if (class_id >= h.group().class_count()) {
      throw UsageError("--phi indicator index out of range (subgroup has " +
                       std::to_string(h.group().class_count()) + " classes)");
    }
    return ClassFunction::indicator(h.group_ref(), class_id);
  }
  throw UsageError("unknown --phi spec \"" + spec +
                   "\" (use one, zero, delta:(..), indicator:k, sigma-phi:(..))");
}

struct HPhi {
  Subgroup h;
  ClassFunction phi;
};

HPhi resolve_subgroup_phi(const FieldDescriptor& entry, const RunConfig& config) {
  if (config.phi.rfind("sigma-phi:", 0) == 0) {
    Permutation sigma;
    try {
      sigma = parse_cycles(config.phi.substr(10), entry.group->degree());
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("bad --phi sigma-phi element: ") + e.what());
    }
    if (!entry.group->contains(sigma)) {
      throw UsageError("sigma-phi element " + format_cycles(sigma) +
                       " is not in the entry group");
    }
    CyclicInductionData data = sigma_phi(entry.group, sigma);
    if (!config.subgroup.empty()) {
      const Subgroup& declared = entry.subfield(config.subgroup).subgroup;
      if (declared.group().elements() != data.subgroup.group().elements()) {
        throw UsageError("--subgroup " + config.subgroup +
                         " differs from the cyclic group generated by the sigma-phi element");
      }
    }
    return HPhi{std::move(data.subgroup), std::move(data.phi)};
  }
  if (config.subgroup.empty()) {
    throw UsageError("--subgroup is required unless --phi is sigma-phi:(..)");
  }
  const SubfieldDescriptor* subfield = nullptr;
  try {
    subfield = &entry.subfield(config.subgroup);
  } catch (const CatalogError& e) {
    throw UsageError(e.what());
  }
  ClassFunction phi = parse_phi(config.phi, subfield->subgroup);
  return HPhi{subfield->subgroup, std::move(phi)};
}

std::vector<int> to_int_vector(const std::vector<std::size_t>& v) {
  std::vector<int> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<int>(v[i]);
  return out;
}

// ---------------------------------------------------------------------------
// verify suites
// ---------------------------------------------------------------------------

using Witness = std::optional<std::string>;

/// Subgroups a verify pass exercises: the declared subfields plus the cyclic
/// subgroup generated by each class representative.
std::vector<std::pair<std::string, Subgroup>> verify_subgroups(const FieldDescriptor& entry) {
  std::vector<std::pair<std::string, Subgroup>> result;
  for (const auto& sf : entry.subfields) {
    result.emplace_back("subfield " + sf.name, sf.subgroup);
  }
  for (std::size_t c = 0; c < entry.group->class_count(); ++c) {
    const Permutation& rep = entry.group->class_representative(c);
    result.emplace_back("cyclic <" + format_cycles(rep) + ">",
                        Subgroup(entry.group, {rep}));
  }
  return result;
}

Witness check_group_core(const FieldDescriptor& entry) {
  const FiniteGroup& g = *entry.group;

  std::size_t class_total = 0;
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    class_total += g.class_size(c);
    const std::vector<int> type = g.class_representative(c).cycle_type();
    for (std::size_t m : g.classes()[c]) {
      if (g.element(m).cycle_type() != type) {
        return "entry " + entry.name + ": cycle type differs inside class " +
               std::to_string(c) + " at " + format_cycles(g.element(m));
      }
    }
  }
  if (class_total != g.order()) {
    return "entry " + entry.name + ": classes do not partition the group";
  }

  for (const auto& h : g.elements()) {
    if (g.centralizer_order(h) * g.classes()[g.class_of(h)].size() != g.order()) {
      return "entry " + entry.name + ": orbit-stabilizer fails at " + format_cycles(h);
    }
  }

  for (std::size_t c = 0; c < g.class_count(); ++c) {
    const std::uint64_t n = g.class_representative(c).order();
    for (std::uint64_t e = 1; e <= n + 2; ++e) {
      if (e <= n && n % e != 0 && e != 2 && e != 3) continue;
      const std::size_t expected = g.power_class(c, e);
      for (std::size_t m : g.classes()[c]) {
        if (g.class_of(power(g.element(m), e)) != expected) {
          return "entry " + entry.name + ": power_class depends on the representative (class " +
                 std::to_string(c) + ", e = " + std::to_string(e) + ")";
        }
      }
    }
  }

  for (const auto& [label, h] : verify_subgroups(entry)) {
    for (const auto& s : g.elements()) {
      const auto orbit_sizes = h.orbit_sizes_on_cosets(s);
      std::size_t total = 0;
      std::size_t ones = 0;
      for (std::size_t size : orbit_sizes) {
        total += size;
        if (size == 1) ++ones;
      }
      if (total != h.index()) {
        return "entry " + entry.name + " (" + label + "): orbit sizes at " +
               format_cycles(s) + " sum to " + std::to_string(total) + " != [G:H]";
      }
      const auto fixed = h.fixed_coset_conjugates(s);
      if (fixed.size() != ones) {
        return "entry " + entry.name + " (" + label + "): " + std::to_string(fixed.size()) +
               " fixed-coset conjugates but " + std::to_string(ones) + " size-1 orbits at " +
               format_cycles(s);
      }
      for (const auto& t : fixed) {
        if (!h.contains(t)) {
          return "entry " + entry.name + " (" + label + "): conjugate " + format_cycles(t) +
                 " escaped H";
        }
      }
    }
  }
  return std::nullopt;
}

Witness check_class_functions(const FieldDescriptor& entry) {
  const FiniteGroup& g = *entry.group;
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<std::int64_t> num_dist(-6, 6);
  std::uniform_int_distribution<std::int64_t> den_dist(1, 6);

  for (const auto& [label, h] : verify_subgroups(entry)) {
    std::vector<ClassFunction> basis;
    for (std::size_t c = 0; c < h.group().class_count(); ++c) {
      basis.push_back(ClassFunction::indicator(h.group_ref(), c));
    }

    for (const auto& phi : basis) {
      if (!reciprocity_gap(h, phi).is_zero()) {
        return "entry " + entry.name + " (" + label + "): nonzero reciprocity gap";
      }
      const ClassFunction induced = induce(h, phi);
      for (const auto& s : g.elements()) {
        Rational direct(0);
        for (const auto& t : h.fixed_coset_conjugates(s)) direct += phi(t);
        if (!(induced(s) == direct)) {
          return "entry " + entry.name + " (" + label +
                 "): pointwise induction identity fails at " + format_cycles(s);
        }
      }
    }

    if (basis.size() >= 2) {
      const Rational a(num_dist(rng), den_dist(rng));
      const Rational b(num_dist(rng), den_dist(rng));
      const ClassFunction combo = a * basis[0] + b * basis[1];
      const ClassFunction lhs = induce(h, combo);
      const ClassFunction rhs = a * induce(h, basis[0]) + b * induce(h, basis[1]);
      if (!(lhs == rhs)) {
        return "entry " + entry.name + " (" + label + "): induction is not linear";
      }
    }
  }

  // Transversal independence on the declared subfields: a reversed transversal
  // must give the same orbit data and the same induced functions.
  for (const auto& sf : entry.subfields) {
    std::vector<Permutation> reversed = sf.subgroup.transversal();
    std::reverse(reversed.begin(), reversed.end());
    Subgroup alt(entry.group, sf.subgroup.group().generators(), reversed);
    for (const auto& s : g.elements()) {
      if (alt.orbit_sizes_on_cosets(s) != sf.subgroup.orbit_sizes_on_cosets(s)) {
        return "entry " + entry.name + " (subfield " + sf.name +
               "): orbit sizes depend on the transversal";
      }
    }
    // alt carries its own FiniteGroup object for H, so each side evaluates its
    // own indicator; both inductions land on the shared parent group.
    for (std::size_t c = 0; c < sf.subgroup.group().class_count(); ++c) {
      const ClassFunction via_alt = induce(alt, ClassFunction::indicator(alt.group_ref(), c));
      const ClassFunction via_canonical =
          induce(sf.subgroup, ClassFunction::indicator(sf.subgroup.group_ref(), c));
      if (!(via_alt == via_canonical)) {
        return "entry " + entry.name + " (subfield " + sf.name +
               "): induced values depend on the transversal";
      }
    }
  }
  return std::nullopt;
}

Witness check_sigma_phi(const FieldDescriptor& entry) {
  const FiniteGroup& g = *entry.group;
  for (const auto& sigma : g.elements()) {
    CyclicInductionData data = sigma_phi(entry.group, sigma);
    ClassFunction expected = ClassFunction::zero(entry.group);
    const std::uint64_t n = sigma.order();
    for (std::uint64_t e = 1; e <= n; ++e) {
      if (n % e != 0) continue;
      expected += ClassFunction::indicator(entry.group, g.class_of(power(sigma, e)));
    }
    if (!(induce(data.subgroup, data.phi) == expected)) {
      return "entry " + entry.name + ": cyclic construction contract fails at sigma = " +
             format_cycles(sigma);
    }
  }
  return std::nullopt;
}

Witness check_splitting_crosscheck(const FieldDescriptor& entry, std::uint64_t bound) {
  for (const auto& sf : entry.subfields) {
    if (!sf.subfield_poly) continue;
    Witness witness;
    std::uint64_t checked = 0;
    for_each_prime(2, bound, [&](std::uint64_t p) {
      if (witness || !entry.is_good_prime(p)) return;
      const SplittingType type = ddf_degrees(*sf.subfield_poly, p);
      if (type.total_degree() != sf.subfield_poly->degree()) {
        witness = "entry " + entry.name + " (subfield " + sf.name +
                  "): factor degrees do not sum to deg g at p = " + std::to_string(p);
        return;
      }
      const std::size_t frob = entry.frobenius_class(p);
      const auto orbit_sizes =
          sf.subgroup.orbit_sizes_on_cosets(entry.group->class_representative(frob));
      if (type.expanded() != to_int_vector(orbit_sizes)) {
        witness = "entry " + entry.name + " (subfield " + sf.name + "): p = " +
                  std::to_string(p) + " factors as " + type.to_string() +
                  " but coset orbits disagree";
        return;
      }
      ++checked;
    });
    if (witness) return witness;
    if (checked == 0) {
      return "entry " + entry.name + " (subfield " + sf.name + "): no primes checked";
    }
  }

  // Cyclotomic resolvers: the class must depend on p mod n alone.
  if (entry.resolver == ResolverKind::kCyclotomic) {
    Witness witness;
    for_each_prime(2, std::min<std::uint64_t>(bound, 10000), [&](std::uint64_t p) {
      if (witness || !entry.is_good_prime(p)) return;
      const std::size_t expected =
          entry.class_of_residue(static_cast<int>(p % static_cast<std::uint64_t>(entry.modulus)));
      if (entry.frobenius_class(p) != expected) {
        witness = "entry " + entry.name + ": residue resolution differs at p = " +
                  std::to_string(p);
      }
    });
    if (witness) return witness;
  }
  return std::nullopt;
}

}  // namespace

int cmd_verify(const RunConfig& config, std::ostream&, std::ostream& err) {
  std::vector<FieldDescriptor> catalog;
  try {
    catalog = load_config_catalog(config);
    err << "[PASS] catalog-validation (" << catalog.size() << " entries)\n";
  } catch (const CatalogError& e) {
    err << "[FAIL] catalog-validation: " << e.what() << "\n";
    return kExitAssertionFailure;
  }

  const std::uint64_t crosscheck_bound = config.quick ? 10000 : 100000;
  bool all_ok = true;
  auto run_suite = [&](const std::string& name,
                       const std::function<Witness(const FieldDescriptor&)>& check) {
    for (const auto& entry : catalog) {
      if (Witness w = check(entry)) {
        err << "[FAIL] " << name << ": " << *w << "\n";
        all_ok = false;
        return;
      }
    }
    err << "[PASS] " << name << "\n";
  };

  run_suite("group-core", check_group_core);
  run_suite("class-functions", check_class_functions);
  run_suite("cyclic-construction", check_sigma_phi);
  run_suite("splitting-crosscheck (p <= " + std::to_string(crosscheck_bound) + ")",
            [&](const FieldDescriptor& e) {
              return check_splitting_crosscheck(e, crosscheck_bound);
            });

  err << (all_ok ? "verify: all suites passed\n" : "verify: FAILURES above\n");
  return all_ok ? kExitOk : kExitAssertionFailure;
}

int cmd_density(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto catalog = load_config_catalog(config);
  const FieldDescriptor& entry = require_entry(catalog, config);
  EntryScan scan(entry, scan_options(config));
  const std::vector<ConvergenceSeries> series = scan.gamma_all();
  double worst = 0.0;
  for (const auto& s : series) {
    worst = std::max(worst,
                     std::abs(s.final_value().ratio - s.theoretical->to_double()));
  }
  err << "density " << entry.name << ": " << series.size() << " classes, x = " << config.x
      << ", max |ratio - |C|/|G|| = " << format_double(worst) << "\n";
  return with_output(config, out, [&](std::ostream& os) {
    write_series_csv(os, series);
    return kExitOk;
  });
}

int cmd_induction(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto catalog = load_config_catalog(config);
  const FieldDescriptor& entry = require_entry(catalog, config);
  HPhi hphi = resolve_subgroup_phi(entry, config);

  EntryScan scan(entry, scan_options(config));
  ConvergenceSeries e_side = scan.expectation_E(hphi.h, hphi.phi);
  ConvergenceSeries k_side = scan.expectation_K(induce(hphi.h, hphi.phi));

  for (std::size_t j = 0; j < e_side.checkpoints.size(); ++j) {
    if (!(e_side.values[j].exact_sum == k_side.values[j].exact_sum)) {
      err << "induction: exact sums DIFFER at x = " << e_side.checkpoints[j] << ": "
          << e_side.values[j].exact_sum << " vs " << k_side.values[j].exact_sum << "\n";
      return kExitAssertionFailure;
    }
  }

  const Rational mean = hphi.phi.mean();
  const double ratio = e_side.final_value().ratio;
  err << "induction " << entry.name << ": exact equality at all "
      << e_side.checkpoints.size() << " checkpoints; final ratio "
      << format_double(ratio) << " vs mean " << mean.to_string() << " (abs error "
      << format_double(std::abs(ratio - mean.to_double())) << ")\n";

  std::vector<ConvergenceSeries> both{std::move(e_side), std::move(k_side)};
  return with_output(config, out, [&](std::ostream& os) {
    write_series_csv(os, both);
    return kExitOk;
  });
}

int cmd_crosscheck(const RunConfig& config, std::ostream&, std::ostream& err) {
  const auto catalog = load_config_catalog(config);
  const FieldDescriptor& entry = require_entry(catalog, config);

  std::vector<const SubfieldDescriptor*> targets;
  if (!config.subgroup.empty()) {
    try {
      targets.push_back(&entry.subfield(config.subgroup));
    } catch (const CatalogError& e) {
      throw UsageError(e.what());
    }
  } else {
    for (const auto& sf : entry.subfields) {
      if (sf.subfield_poly) targets.push_back(&sf);
    }
  }
  if (targets.empty()) throw UsageError("entry has no subfield with a subfieldPoly");

  for (const SubfieldDescriptor* sf : targets) {
    if (!sf->subfield_poly) {
      throw UsageError("subfield " + sf->name + " has no subfieldPoly to cross-check");
    }
    std::uint64_t checked = 0;
    std::optional<std::string> mismatch;
    for_each_prime(2, config.x, [&](std::uint64_t p) {
      if (mismatch || !entry.is_good_prime(p)) return;
      const auto degrees = ddf_degrees(*sf->subfield_poly, p).expanded();
      const auto orbits = to_int_vector(sf->subgroup.orbit_sizes_on_cosets(
          entry.group->class_representative(entry.frobenius_class(p))));
      if (degrees != orbits) {
        std::ostringstream msg;
        msg << "p = " << p << ": factor degrees [";
        for (int d : degrees) msg << ' ' << d;
        msg << " ] vs coset orbits [";
        for (int d : orbits) msg << ' ' << d;
        msg << " ]";
        mismatch = msg.str();
      }
      ++checked;
    });
    if (mismatch) {
      err << "crosscheck " << entry.name << "/" << sf->name << ": MISMATCH " << *mismatch
          << "\n";
      return kExitAssertionFailure;
    }
    err << "crosscheck " << entry.name << "/" << sf->name << ": OK " << checked
        << " primes\n";
  }
  return kExitOk;
}

int cmd_reduce(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto catalog = load_config_catalog(config);
  const FieldDescriptor& entry = require_entry(catalog, config);
  const FiniteGroup& g = *entry.group;

  const std::vector<Rational> exact = cyclic_reduction<Rational>(
      entry.group,
      [](const Subgroup&, const ClassFunction& phi) { return phi.mean(); });
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    const Rational expected(static_cast<std::int64_t>(g.class_size(c)),
                            static_cast<std::int64_t>(g.order()));
    if (!(exact[c] == expected)) {
      err << "reduce " << entry.name << ": exact oracle disagrees on class "
          << entry.class_label(c) << ": " << exact[c] << " vs " << expected << "\n";
      return kExitAssertionFailure;
    }
  }

  EntryScan scan(entry, scan_options(config));
  const std::vector<double> empirical = cyclic_reduction<double>(
      entry.group, [&](const Subgroup& h, const ClassFunction& phi) {
        return scan.expectation_E(h, phi).final_value().ratio;
      });

  double worst = 0.0;
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    worst = std::max(worst, std::abs(empirical[c] - exact[c].to_double()));
  }
  err << "reduce " << entry.name << ": exact oracle reproduces |C|/|G|; empirical (x = "
      << config.x << ") max abs error " << format_double(worst) << "\n";

  return with_output(config, out, [&](std::ostream& os) {
    os << "class,order,class_size,theoretical,empirical,abs_error\n";
    for (std::size_t c = 0; c < g.class_count(); ++c) {
      os << entry.class_label(c) << ',' << g.class_representative(c).order() << ','
         << g.class_size(c) << ',' << exact[c].to_string() << ','
         << format_double(empirical[c]) << ','
         << format_double(std::abs(empirical[c] - exact[c].to_double())) << '\n';
    }
    return kExitOk;
  });
}

int cmd_analytic(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto catalog = load_config_catalog(config);
  const FieldDescriptor& entry = require_entry(catalog, config);
  HPhi hphi = resolve_subgroup_phi(entry, config);
  if (config.s_values.empty()) throw UsageError("at least one --s value is required");
  for (double s : config.s_values) {
    if (!(s > 1.0)) throw UsageError("--s must be > 1");
  }
  if (config.cutoff < 2) throw UsageError("--cutoff must be >= 2");

  std::vector<AnalyticPoint> points;
  for (double s : config.s_values) {
    points.push_back(analytic_pair(entry, hphi.h, hphi.phi, s, config.cutoff));
  }
  for (const auto& p : points) {
    if (!p.termwise_equal || p.e_side != p.k_side) {
      err << "analytic: sides DIFFER at s = " << format_double(p.s) << "\n";
      return kExitAssertionFailure;
    }
  }
  double worst = 0.0;
  for (const auto& p : points) {
    worst = std::max(worst, std::abs(p.e_side - p.theoretical.to_double()));
  }
  err << "analytic " << entry.name << ": termwise equality at all "
      << points.size() << " s values; cutoff = " << config.cutoff
      << ", max |value - mean| = " << format_double(worst)
      << " (slow logarithmic convergence)\n";

  return with_output(config, out, [&](std::ostream& os) {
    os << "s,side,value,theoretical\n";
    for (const auto& p : points) {
      os << format_double(p.s) << ",E," << format_double(p.e_side) << ','
         << p.theoretical.to_string() << '\n';
      os << format_double(p.s) << ",K," << format_double(p.k_side) << ','
         << p.theoretical.to_string() << '\n';
    }
    return kExitOk;
  });
}

}  // namespace cheblab::cli
