#ifndef CHEBLAB_CATALOG_HPP
#define CHEBLAB_CATALOG_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cheblab/class_function.hpp"
#include "cheblab/group.hpp"
#include "cheblab/polynomial.hpp"

namespace cheblab {

class CatalogError : public std::runtime_error {
 public:
  explicit CatalogError(const std::string& what) : std::runtime_error(what) {}
};

/// Intermediate field E of an entry, given by its fixing subgroup H <= G and
/// optionally a defining polynomial g_E of degree [G:H] used only for the
/// group-theory-free cross-checks.
struct SubfieldDescriptor {
  std::string name;
  Subgroup subgroup;
  std::optional<IntPolynomial> subfield_poly;
};

enum class ResolverKind { kCycleType, kCyclotomic };

/// One catalog entry: a Galois extension of the rationals presented by a monic
/// polynomial together with its (declared, then validated) Galois group acting
/// on the root labels, the excluded primes, and a rule that resolves the
/// Frobenius class of a good prime.
///
/// Resolvers:
///   "cycle-type"    class = unique class whose cycle type equals the factor
///                   degree multiset of poly mod p (injectivity validated).
///   "cyclotomic:n"  G is the unit group mod n acting on the units by
///                   multiplication; class = class of the residue p mod n.
class FieldDescriptor {
 public:
  std::string name;
  IntPolynomial poly;
  ResolverKind resolver;
  int modulus = 0;  // n for cyclotomic resolvers, else 0
  GroupRef group;
  std::vector<std::uint64_t> bad_primes;  // sorted ascending
  std::vector<SubfieldDescriptor> subfields;

  bool is_good_prime(std::uint64_t p) const;

  /// Conjugacy class id of the Frobenius at p.  Throws BadPrimeError for bad
  /// primes and CatalogError when a cycle type matches no class.
  std::size_t frobenius_class(std::uint64_t p) const;

  /// Stable human-readable class tag: cycle notation of the canonical class
  /// representative, or "res<k>" for cyclotomic entries.
  std::string class_label(std::size_t class_id) const;

  const SubfieldDescriptor& subfield(const std::string& subfield_name) const;

  /// Units mod n in ascending order (cyclotomic entries only).
  const std::vector<int>& residues() const { return residues_; }
  std::size_t class_of_residue(int residue) const;

 private:
  friend std::vector<FieldDescriptor> load_catalog(const std::string& json_text);

  FieldDescriptor(std::string entry_name, IntPolynomial entry_poly)
      : name(std::move(entry_name)), poly(std::move(entry_poly)),
        resolver(ResolverKind::kCycleType) {}

  std::map<std::vector<int>, std::size_t> class_by_cycle_type_;
  std::vector<int> residues_;                  // units mod n, ascending
  std::vector<std::size_t> class_by_residue_;  // indexed by residue (size n)
};

/// Parses and validates a catalog document (JSON).  Every invariant violation
/// is a hard CatalogError naming the entry and the failed check.
std::vector<FieldDescriptor> load_catalog(const std::string& json_text);
std::vector<FieldDescriptor> load_catalog_file(const std::string& path);

/// The built-in entries (cyclo-5, cyclo-7, s3-cbrt2, s4, s5), validated at
/// first use through the same path as load_catalog.
const std::vector<FieldDescriptor>& builtin_catalog();

/// The built-in catalog as a JSON document (what builtin_catalog() parses).
std::string builtin_catalog_json();

/// Entry lookup by name; throws CatalogError when missing.
const FieldDescriptor& find_entry(const std::vector<FieldDescriptor>& catalog,
                                  const std::string& name);

}  // namespace cheblab

#endif
