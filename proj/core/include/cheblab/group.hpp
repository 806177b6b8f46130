#ifndef CHEBLAB_GROUP_HPP
#define CHEBLAB_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "cheblab/permutation.hpp"

namespace cheblab {

class FiniteGroup;
using GroupRef = std::shared_ptr<const FiniteGroup>;

/// Finite permutation group given by full enumeration.  Elements are kept in
/// sorted order (lexicographic on image tables), so the identity is element 0
/// and membership is a binary search.  Conjugacy classes are sorted by their
/// canonical representative (least element), so class 0 is the identity class.
/// Immutable after construction.
class FiniteGroup {
 public:
  static constexpr std::size_t kDefaultOrderCap = 10000;

  /// Closes `gens` under composition.  Throws std::invalid_argument on an
  /// empty generator list or mixed degrees, std::length_error when the order
  /// exceeds `cap`.
  static FiniteGroup generate(std::vector<Permutation> gens,
                              std::size_t cap = kDefaultOrderCap);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const Permutation& element(std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }

  std::size_t class_count() const { return classes_.size(); }
  /// Element indices of each conjugacy class, ascending.
  const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }
  std::size_t class_size(std::size_t c) const { return classes_[c].size(); }
  const Permutation& class_representative(std::size_t c) const {
    return elements_[classes_[c].front()];
  }
  std::size_t class_of_index(std::size_t elem_index) const { return class_of_[elem_index]; }
  /// Throws std::invalid_argument when p is not a member.
  std::size_t class_of(const Permutation& p) const;

  /// |{h in G : hg = gh}| by direct scan; equals |G| / |class(g)|.
  /// Throws std::invalid_argument when g is not a member.
  std::size_t centralizer_order(const Permutation& g) const;

  /// Class of rep(c)^e; independent of the chosen representative.
  std::size_t power_class(std::size_t c, std::uint64_t e) const;

  bool is_transitive() const;

 private:
  FiniteGroup() = default;
  void compute_classes();

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> class_of_;
};

/// Convenience: generate and wrap in a shared handle.
GroupRef make_group(std::vector<Permutation> gens,
                    std::size_t cap = FiniteGroup::kDefaultOrderCap);

/// Subgroup H of a parent group G together with a left transversal of G/H.
/// The subgroup also carries its own FiniteGroup view (conjugacy classes of H
/// itself), which is what class functions on H are defined against.
///
/// The default transversal is deterministic: scanning the parent's sorted
/// element list, each element whose coset is new becomes the representative.
/// Every quantity exposed here that feeds the estimators is
/// transversal-independent; the alternate-transversal constructor exists so
/// tests can check that.
class Subgroup {
 public:
  Subgroup(GroupRef parent, const std::vector<Permutation>& gens);
  Subgroup(GroupRef parent, const std::vector<Permutation>& gens,
           std::vector<Permutation> transversal);

  const FiniteGroup& parent() const { return *parent_; }
  const GroupRef& parent_ref() const { return parent_; }
  const FiniteGroup& group() const { return *self_; }
  const GroupRef& group_ref() const { return self_; }

  std::size_t order() const { return self_->order(); }
  /// r = [G:H].
  std::size_t index() const { return transversal_.size(); }
  const std::vector<Permutation>& transversal() const { return transversal_; }

  bool contains(const Permutation& p) const { return self_->contains(p); }

  /// Sorted multiset of <s>-orbit sizes on the coset space G/H; the sizes sum
  /// to [G:H].  Throws std::invalid_argument when s is not in the parent.
  std::vector<std::size_t> orbit_sizes_on_cosets(const Permutation& s) const;

  /// [g^-1 s g for transversal elements g with g^-1 s g in H], in transversal
  /// order.  Its length equals the number of size-1 orbits of s on G/H.
  std::vector<Permutation> fixed_coset_conjugates(const Permutation& s) const;

 private:
  void build_cosets();

  GroupRef parent_;
  GroupRef self_;
  std::vector<Permutation> transversal_;
  std::vector<std::size_t> coset_of_;  // parent element index -> coset index
};

/// All subgroups of G, each as its sorted element-index list, found by closing
/// one-generator extensions starting from the trivial subgroup.  Sorted by
/// (order, indices).  Exact but exhaustive; meant for |G| <= a few hundred.
std::vector<std::vector<std::size_t>> all_subgroup_element_sets(const FiniteGroup& g);

/// Same enumeration, materialized as Subgroup objects over `parent`.
std::vector<Subgroup> all_subgroups(const GroupRef& parent);

}  // namespace cheblab

#endif
