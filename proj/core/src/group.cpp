#include "cheblab/group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace cheblab {

FiniteGroup FiniteGroup::generate(std::vector<Permutation> gens, std::size_t cap) {
  if (gens.empty()) {
    throw std::invalid_argument("FiniteGroup::generate: empty generating set");
  }
  const int degree = gens.front().degree();
  for (const auto& g : gens) {
    if (g.degree() != degree) {
      throw std::invalid_argument("FiniteGroup::generate: mixed degrees");
    }
  }

  std::set<Permutation> closure;
  closure.insert(Permutation::identity(degree));
  std::vector<Permutation> frontier(closure.begin(), closure.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (const auto& g : gens) {
        Permutation q = compose(g, p);
        if (closure.insert(q).second) {
          if (closure.size() > cap) {
            throw std::length_error("FiniteGroup::generate: order exceeds cap " +
                                    std::to_string(cap));
          }
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }

  FiniteGroup result;
  result.degree_ = degree;
  result.generators_ = std::move(gens);
  result.elements_.assign(closure.begin(), closure.end());  // set is sorted
  result.compute_classes();
  return result;
}

void FiniteGroup::compute_classes() {
  const std::size_t n = elements_.size();
  class_of_.assign(n, n);  // n = unassigned
  for (std::size_t i = 0; i < n; ++i) {
    if (class_of_[i] != n) continue;
    const std::size_t class_id = classes_.size();
    // Orbit of elements_[i] under conjugation; elements_[i] is the least
    // member since earlier elements already belong to finished classes.
    std::vector<std::size_t> members;
    class_of_[i] = class_id;
    members.push_back(i);
    for (std::size_t k = 0; k < members.size(); ++k) {
      const Permutation& p = elements_[members[k]];
      for (const auto& g : generators_) {
        std::size_t j = *index_of(conjugate(p, g));
        if (class_of_[j] == n) {
          class_of_[j] = class_id;
          members.push_back(j);
        }
      }
    }
    std::sort(members.begin(), members.end());
    classes_.push_back(std::move(members));
  }
}

std::optional<std::size_t> FiniteGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p)) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t FiniteGroup::class_of(const Permutation& p) const {
  auto idx = index_of(p);
  if (!idx) throw std::invalid_argument("FiniteGroup::class_of: not a member");
  return class_of_[*idx];
}

std::size_t FiniteGroup::centralizer_order(const Permutation& g) const {
  if (!contains(g)) {
    throw std::invalid_argument("FiniteGroup::centralizer_order: not a member");
  }
  std::size_t count = 0;
  for (const auto& h : elements_) {
    if (compose(h, g) == compose(g, h)) ++count;
  }
  return count;
}

std::size_t FiniteGroup::power_class(std::size_t c, std::uint64_t e) const {
  if (c >= classes_.size()) {
    throw std::invalid_argument("FiniteGroup::power_class: bad class id");
  }
  return class_of(power(class_representative(c), e));
}

bool FiniteGroup::is_transitive() const {
  std::vector<char> reached(degree_, 0);
  reached[0] = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& g : generators_) {
      int y = g(x);
      if (!reached[y]) {
        reached[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return std::all_of(reached.begin(), reached.end(), [](char c) { return c != 0; });
}

GroupRef make_group(std::vector<Permutation> gens, std::size_t cap) {
  return std::make_shared<const FiniteGroup>(FiniteGroup::generate(std::move(gens), cap));
}

Subgroup::Subgroup(GroupRef parent, const std::vector<Permutation>& gens)
    : parent_(std::move(parent)) {
  self_ = make_group(gens, parent_->order());
  for (const auto& h : self_->elements()) {
    if (!parent_->contains(h)) {
      throw std::invalid_argument("Subgroup: element outside the parent group");
    }
  }
  // First-seen transversal over the parent's sorted element list.
  const std::size_t n = parent_->order();
  coset_of_.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (coset_of_[i] != n) continue;
    const std::size_t coset = transversal_.size();
    const Permutation& rep = parent_->element(i);
    transversal_.push_back(rep);
    for (const auto& h : self_->elements()) {
      coset_of_[*parent_->index_of(compose(rep, h))] = coset;
    }
  }
  if (parent_->order() != transversal_.size() * self_->order()) {
    throw std::logic_error("Subgroup: coset partition failed");
  }
}

Subgroup::Subgroup(GroupRef parent, const std::vector<Permutation>& gens,
                   std::vector<Permutation> transversal)
    : Subgroup(std::move(parent), gens) {
  // Replace the canonical transversal after validating that the supplied one
  // hits every coset exactly once.
  if (transversal.size() != transversal_.size()) {
    throw std::invalid_argument("Subgroup: transversal size != [G:H]");
  }
  std::vector<char> hit(transversal_.size(), 0);
  std::vector<std::size_t> new_coset_of(parent_->order());
  for (std::size_t c = 0; c < transversal.size(); ++c) {
    auto idx = parent_->index_of(transversal[c]);
    if (!idx) throw std::invalid_argument("Subgroup: transversal element outside parent");
    std::size_t old = coset_of_[*idx];
    if (hit[old]) throw std::invalid_argument("Subgroup: transversal hits a coset twice");
    hit[old] = 1;
    for (const auto& h : self_->elements()) {
      new_coset_of[*parent_->index_of(compose(transversal[c], h))] = c;
    }
  }
  transversal_ = std::move(transversal);
  coset_of_ = std::move(new_coset_of);
}

std::vector<std::size_t> Subgroup::orbit_sizes_on_cosets(const Permutation& s) const {
  if (!parent_->contains(s)) {
    throw std::invalid_argument("orbit_sizes_on_cosets: s outside the parent group");
  }
  const std::size_t r = transversal_.size();
  // Action of s on cosets: gH -> (s g)H.
  std::vector<std::size_t> image(r);
  for (std::size_t c = 0; c < r; ++c) {
    image[c] = coset_of_[*parent_->index_of(compose(s, transversal_[c]))];
  }
  std::vector<std::size_t> sizes;
  std::vector<char> seen(r, 0);
  for (std::size_t start = 0; start < r; ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t c = start; !seen[c]; c = image[c]) {
      seen[c] = 1;
      ++len;
    }
    sizes.push_back(len);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<Permutation> Subgroup::fixed_coset_conjugates(const Permutation& s) const {
  if (!parent_->contains(s)) {
    throw std::invalid_argument("fixed_coset_conjugates: s outside the parent group");
  }
  std::vector<Permutation> result;
  for (const auto& g : transversal_) {
    Permutation t = conjugate(s, g);
    if (self_->contains(t)) result.push_back(std::move(t));
  }
  return result;
}

namespace {

// Closure of a set of element indices under the multiplication table.
std::vector<std::size_t> close_indices(std::vector<std::size_t> seed,
                                       const std::vector<std::uint16_t>& table,
                                       std::size_t order) {
  std::vector<char> in(order, 0);
  std::vector<std::size_t> elems;
  auto add = [&](std::size_t i) {
    if (!in[i]) {
      in[i] = 1;
      elems.push_back(i);
    }
  };
  add(0);  // identity is element 0 in a sorted group
  for (std::size_t i : seed) add(i);
  for (std::size_t k = 1; k < elems.size(); ++k) {  // elems[0] = id needs no products
    for (std::size_t j = 0; j < elems.size(); ++j) {
      add(table[elems[k] * order + elems[j]]);
      add(table[elems[j] * order + elems[k]]);
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

}  // namespace

std::vector<std::vector<std::size_t>> all_subgroup_element_sets(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n > 0xFFFF) throw std::length_error("all_subgroup_element_sets: group too large");
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] =
          static_cast<std::uint16_t>(*g.index_of(compose(g.element(a), g.element(b))));
    }
  }

  std::set<std::vector<std::size_t>> found;
  std::vector<std::vector<std::size_t>> queue;
  std::vector<std::size_t> trivial{0};
  found.insert(trivial);
  queue.push_back(trivial);
  while (!queue.empty()) {
    std::vector<std::size_t> h = std::move(queue.back());
    queue.pop_back();
    std::vector<char> in(n, 0);
    for (std::size_t i : h) in[i] = 1;
    for (std::size_t x = 1; x < n; ++x) {
      if (in[x]) continue;
      std::vector<std::size_t> seed = h;
      seed.push_back(x);
      auto closed = close_indices(std::move(seed), table, n);
      if (found.insert(closed).second) queue.push_back(std::move(closed));
    }
  }

  std::vector<std::vector<std::size_t>> result(found.begin(), found.end());
  std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return result;
}

std::vector<Subgroup> all_subgroups(const GroupRef& parent) {
  std::vector<Subgroup> result;
  for (const auto& indices : all_subgroup_element_sets(*parent)) {
    std::vector<Permutation> gens;
    gens.reserve(indices.size());
    for (std::size_t i : indices) gens.push_back(parent->element(i));
    result.emplace_back(parent, gens);
  }
  return result;
}

}  // namespace cheblab
