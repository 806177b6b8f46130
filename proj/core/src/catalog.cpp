#include "cheblab/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace cheblab {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& entry, const std::string& what) {
  throw CatalogError("catalog entry \"" + entry + "\": " + what);
}

std::vector<int> units_mod(int n) {
  std::vector<int> units;
  for (int r = 1; r < n; ++r) {
    if (std::gcd(r, n) == 1) units.push_back(r);
  }
  return units;
}

/// Multiplication-by-r permutation on the units mod n (points = units in
/// ascending order).
Permutation multiplication_map(int r, int n, const std::vector<int>& units) {
  std::vector<int> images(units.size());
  for (std::size_t i = 0; i < units.size(); ++i) {
    int product = static_cast<int>((static_cast<long long>(units[i]) * r) % n);
    auto it = std::lower_bound(units.begin(), units.end(), product);
    images[i] = static_cast<int>(it - units.begin());
  }
  return Permutation(std::move(images));
}

IntPolynomial parse_poly(const json& j, const std::string& entry, const std::string& field) {
  if (!j.is_array() || j.size() < 2) {
    fail(entry, field + " must be an integer array of length >= 2 (ascending degree)");
  }
  std::vector<std::int64_t> coeffs;
  for (const auto& c : j) {
    if (!c.is_number_integer()) fail(entry, field + " must contain integers only");
    coeffs.push_back(c.get<std::int64_t>());
  }
  try {
    return IntPolynomial(std::move(coeffs));
  } catch (const std::invalid_argument& e) {
    fail(entry, field + ": " + e.what());
  }
}

std::vector<Permutation> parse_generators(const json& j, int degree,
                                          const std::string& entry,
                                          const std::string& field) {
  if (!j.is_array() || j.empty()) fail(entry, field + " must be a nonempty array");
  std::vector<Permutation> gens;
  for (const auto& g : j) {
    if (!g.is_string()) fail(entry, field + " must contain cycle-notation strings");
    try {
      gens.push_back(parse_cycles(g.get<std::string>(), degree));
    } catch (const std::invalid_argument& e) {
      fail(entry, field + ": " + e.what());
    }
  }
  return gens;
}

void validate_disc_primes(const IntPolynomial& f, const std::vector<std::uint64_t>& bad,
                          const std::string& entry, const std::string& what) {
  if (f.degree() > 5) return;  // exact integer discriminant only up to degree 5
  std::int64_t disc = discriminant(f);
  if (disc == 0) fail(entry, what + " has zero discriminant (not separable)");
  for (std::uint64_t q : prime_factors(disc)) {
    if (!std::binary_search(bad.begin(), bad.end(), q)) {
      fail(entry, what + ": discriminant prime " + std::to_string(q) +
                      " missing from badPrimes (disc = " + std::to_string(disc) + ")");
    }
  }
}

}  // namespace

bool FieldDescriptor::is_good_prime(std::uint64_t p) const {
  return !std::binary_search(bad_primes.begin(), bad_primes.end(), p);
}

std::size_t FieldDescriptor::frobenius_class(std::uint64_t p) const {
  if (!is_good_prime(p)) {
    throw BadPrimeError("frobenius_class: " + std::to_string(p) +
                        " is a bad prime of entry " + name);
  }
  if (resolver == ResolverKind::kCyclotomic) {
    return class_of_residue(static_cast<int>(p % modulus));
  }
  std::vector<int> type = ddf_degrees(poly, p).expanded();
  auto it = class_by_cycle_type_.find(type);
  if (it == class_by_cycle_type_.end()) {
    throw CatalogError("entry " + name + ": cycle type unresolvable at p = " +
                       std::to_string(p) + " (catalog corruption)");
  }
  return it->second;
}

std::size_t FieldDescriptor::class_of_residue(int residue) const {
  if (residue < 0 || residue >= modulus || class_by_residue_[residue] == SIZE_MAX) {
    throw CatalogError("entry " + name + ": residue " + std::to_string(residue) +
                       " is not a unit mod " + std::to_string(modulus));
  }
  return class_by_residue_[residue];
}

std::string FieldDescriptor::class_label(std::size_t class_id) const {
  const Permutation& rep = group->class_representative(class_id);
  if (resolver == ResolverKind::kCyclotomic) {
    return "res" + std::to_string(residues_[rep(0)]);  // image of the unit 1
  }
  return format_cycles(rep);
}

const SubfieldDescriptor& FieldDescriptor::subfield(const std::string& subfield_name) const {
  for (const auto& sf : subfields) {
    if (sf.name == subfield_name) return sf;
  }
  throw CatalogError("entry " + name + ": no subfield named \"" + subfield_name + "\"");
}

std::vector<FieldDescriptor> load_catalog(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw CatalogError(std::string("catalog parse error: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array()) {
    throw CatalogError("catalog document must be an object with an \"entries\" array");
  }

  std::vector<FieldDescriptor> catalog;
  for (const auto& entry_json : doc["entries"]) {
    if (!entry_json.is_object() || !entry_json.contains("name") ||
        !entry_json["name"].is_string()) {
      throw CatalogError("catalog entry without a string \"name\"");
    }
    const std::string name = entry_json["name"].get<std::string>();
    for (const auto& existing : catalog) {
      if (existing.name == name) fail(name, "duplicate entry name");
    }
    if (!entry_json.contains("poly")) fail(name, "missing \"poly\"");
    if (!entry_json.contains("resolver") || !entry_json["resolver"].is_string()) {
      fail(name, "missing \"resolver\"");
    }
    if (!entry_json.contains("badPrimes") || !entry_json["badPrimes"].is_array()) {
      fail(name, "missing \"badPrimes\" array");
    }

    FieldDescriptor entry(name, parse_poly(entry_json["poly"], name, "poly"));

    for (const auto& b : entry_json["badPrimes"]) {
      if (!b.is_number_integer() || b.get<std::int64_t>() < 2) {
        fail(name, "badPrimes must be integers >= 2");
      }
      entry.bad_primes.push_back(b.get<std::uint64_t>());
    }
    std::sort(entry.bad_primes.begin(), entry.bad_primes.end());
    entry.bad_primes.erase(
        std::unique(entry.bad_primes.begin(), entry.bad_primes.end()),
        entry.bad_primes.end());

    const std::string resolver_text = entry_json["resolver"].get<std::string>();
    if (resolver_text == "cycle-type") {
      entry.resolver = ResolverKind::kCycleType;
      if (!entry_json.contains("generators")) {
        fail(name, "cycle-type entries require \"generators\"");
      }
      std::vector<Permutation> gens =
          parse_generators(entry_json["generators"], entry.poly.degree(), name, "generators");
      try {
        entry.group = make_group(std::move(gens));
      } catch (const std::exception& e) {
        fail(name, std::string("group generation failed: ") + e.what());
      }
      if (!entry.group->is_transitive()) {
        fail(name, "group is not transitive on the root labels");
      }
      // Cycle type -> class lookup; injectivity is what makes the resolver
      // well-defined, so ambiguity is a hard error.
      for (std::size_t c = 0; c < entry.group->class_count(); ++c) {
        std::vector<int> type = entry.group->class_representative(c).cycle_type();
        auto [it, inserted] = entry.class_by_cycle_type_.emplace(type, c);
        if (!inserted) {
          std::string type_text;
          for (int d : type) type_text += (type_text.empty() ? "" : ",") + std::to_string(d);
          fail(name, "ambiguous cycle type {" + type_text + "} shared by classes " +
                         std::to_string(it->second) + " and " + std::to_string(c));
        }
      }
    } else if (resolver_text.rfind("cyclotomic:", 0) == 0) {
      entry.resolver = ResolverKind::kCyclotomic;
      try {
        entry.modulus = std::stoi(resolver_text.substr(11));
      } catch (const std::exception&) {
        fail(name, "malformed resolver \"" + resolver_text + "\"");
      }
      if (entry.modulus < 3) fail(name, "cyclotomic modulus must be >= 3");
      if (entry_json.contains("generators")) {
        fail(name, "cyclotomic entries present G as the residue group; omit \"generators\"");
      }
      entry.residues_ = units_mod(entry.modulus);
      if (static_cast<int>(entry.residues_.size()) != entry.poly.degree()) {
        fail(name, "poly degree " + std::to_string(entry.poly.degree()) +
                       " != unit group order " + std::to_string(entry.residues_.size()));
      }
      std::vector<Permutation> gens;
      for (int r : entry.residues_) {
        gens.push_back(multiplication_map(r, entry.modulus, entry.residues_));
      }
      entry.group = make_group(std::move(gens));
      if (entry.group->order() != entry.residues_.size()) {
        fail(name, "residue action closure has wrong order");
      }
      entry.class_by_residue_.assign(entry.modulus, SIZE_MAX);
      for (int r : entry.residues_) {
        entry.class_by_residue_[r] = entry.group->class_of(
            multiplication_map(r, entry.modulus, entry.residues_));
      }
      for (std::uint64_t q : prime_factors(entry.modulus)) {
        if (!std::binary_search(entry.bad_primes.begin(), entry.bad_primes.end(), q)) {
          fail(name, "prime " + std::to_string(q) + " divides the modulus but is not bad");
        }
      }
    } else {
      fail(name, "unknown resolver \"" + resolver_text + "\"");
    }

    validate_disc_primes(entry.poly, entry.bad_primes, name, "poly");

    if (entry_json.contains("subfields")) {
      if (!entry_json["subfields"].is_array()) fail(name, "\"subfields\" must be an array");
      for (const auto& sf_json : entry_json["subfields"]) {
        if (!sf_json.is_object() || !sf_json.contains("name") ||
            !sf_json["name"].is_string()) {
          fail(name, "subfield without a string \"name\"");
        }
        const std::string sf_name = sf_json["name"].get<std::string>();
        for (const auto& existing : entry.subfields) {
          if (existing.name == sf_name) fail(name, "duplicate subfield \"" + sf_name + "\"");
        }
        if (!sf_json.contains("subgroupGenerators")) {
          fail(name, "subfield \"" + sf_name + "\" missing subgroupGenerators");
        }
        std::vector<Permutation> sub_gens =
            parse_generators(sf_json["subgroupGenerators"], entry.group->degree(), name,
                             "subfield \"" + sf_name + "\" subgroupGenerators");
        std::optional<Subgroup> subgroup;
        try {
          subgroup.emplace(entry.group, sub_gens);
        } catch (const std::exception& e) {
          fail(name, "subfield \"" + sf_name + "\": " + e.what());
        }
        std::optional<IntPolynomial> sf_poly;
        if (sf_json.contains("subfieldPoly")) {
          sf_poly = parse_poly(sf_json["subfieldPoly"], name,
                               "subfield \"" + sf_name + "\" subfieldPoly");
          if (static_cast<std::size_t>(sf_poly->degree()) != subgroup->index()) {
            fail(name, "subfield \"" + sf_name + "\": deg subfieldPoly = " +
                           std::to_string(sf_poly->degree()) + " but [G:H] = " +
                           std::to_string(subgroup->index()));
          }
          validate_disc_primes(*sf_poly, entry.bad_primes, name,
                               "subfield \"" + sf_name + "\" subfieldPoly");
        }
        entry.subfields.push_back(
            SubfieldDescriptor{sf_name, std::move(*subgroup), std::move(sf_poly)});
      }
    }

    catalog.push_back(std::move(entry));
  }
  return catalog;
}

std::vector<FieldDescriptor> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_catalog(buffer.str());
}

std::string builtin_catalog_json() {
  return R"json({
  "entries": [
    {
      "name": "cyclo-5",
      "poly": [1, 1, 1, 1, 1],
      "resolver": "cyclotomic:5",
      "badPrimes": [5],
      "subfields": [
        {
          "name": "real-quadratic",
          "subgroupGenerators": ["(1 4)(2 3)"],
          "subfieldPoly": [-1, 1, 1]
        }
      ]
    },
    {
      "name": "cyclo-7",
      "poly": [1, 1, 1, 1, 1, 1, 1],
      "resolver": "cyclotomic:7",
      "badPrimes": [7],
      "subfields": [
        {
          "name": "real-cubic",
          "subgroupGenerators": ["(1 6)(2 5)(3 4)"],
          "subfieldPoly": [-1, -2, 1, 1]
        },
        {
          "name": "quadratic",
          "subgroupGenerators": ["(1 2 4)(3 6 5)"],
          "subfieldPoly": [2, 1, 1]
        }
      ]
    },
    {
      "name": "s3-cbrt2",
      "poly": [-2, 0, 0, 1],
      "resolver": "cycle-type",
      "generators": ["(1 2 3)", "(1 2)"],
      "badPrimes": [2, 3],
      "subfields": [
        {
          "name": "root-field",
          "subgroupGenerators": ["(2 3)"],
          "subfieldPoly": [-2, 0, 0, 1]
        },
        {
          "name": "quadratic",
          "subgroupGenerators": ["(1 2 3)"],
          "subfieldPoly": [1, 1, 1]
        }
      ]
    },
    {
      "name": "s4",
      "poly": [-1, -1, 0, 0, 1],
      "resolver": "cycle-type",
      "generators": ["(1 2 3 4)", "(1 2)"],
      "badPrimes": [283],
      "subfields": [
        {
          "name": "root-field",
          "subgroupGenerators": ["(2 3)", "(2 3 4)"],
          "subfieldPoly": [-1, -1, 0, 0, 1]
        }
      ]
    },
    {
      "name": "s5",
      "poly": [-1, -1, 0, 0, 0, 1],
      "resolver": "cycle-type",
      "generators": ["(1 2 3 4 5)", "(1 2)"],
      "badPrimes": [19, 151],
      "subfields": [
        {
          "name": "root-field",
          "subgroupGenerators": ["(2 3)", "(2 3 4 5)"],
          "subfieldPoly": [-1, -1, 0, 0, 0, 1]
        }
      ]
    }
  ]
}
)json";
}

const std::vector<FieldDescriptor>& builtin_catalog() {
  static const std::vector<FieldDescriptor> catalog = load_catalog(builtin_catalog_json());
  return catalog;
}

const FieldDescriptor& find_entry(const std::vector<FieldDescriptor>& catalog,
                                  const std::string& name) {
  for (const auto& entry : catalog) {
    if (entry.name == name) return entry;
  }
  throw CatalogError("no catalog entry named \"" + name + "\"");
}

}  // namespace cheblab
