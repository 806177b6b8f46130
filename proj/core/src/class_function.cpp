#include "cheblab/class_function.hpp"

#include <stdexcept>

namespace cheblab {

ClassFunction::ClassFunction(GroupRef group, std::vector<Rational> class_values)
    : group_(std::move(group)), values_(std::move(class_values)) {
  if (values_.size() != group_->class_count()) {
    throw std::invalid_argument("ClassFunction: one value per conjugacy class required");
  }
}

ClassFunction ClassFunction::zero(GroupRef group) {
  std::vector<Rational> values(group->class_count());
  return ClassFunction(std::move(group), std::move(values));
}

ClassFunction ClassFunction::constant(GroupRef group, const Rational& value) {
  std::vector<Rational> values(group->class_count(), value);
  return ClassFunction(std::move(group), std::move(values));
}

ClassFunction ClassFunction::delta_at(GroupRef group, const Permutation& h) {
  std::size_t c = group->class_of(h);  // throws when h is not a member
  return indicator(std::move(group), c);
}

ClassFunction ClassFunction::indicator(GroupRef group, std::size_t class_id) {
  if (class_id >= group->class_count()) {
    throw std::invalid_argument("ClassFunction::indicator: bad class id");
  }
  std::vector<Rational> values(group->class_count());
  values[class_id] = Rational(1);
  return ClassFunction(std::move(group), std::move(values));
}

Rational ClassFunction::mean() const {
  Rational sum(0);
  for (std::size_t c = 0; c < values_.size(); ++c) {
    sum += values_[c] * Rational(static_cast<std::int64_t>(group_->class_size(c)));
  }
  return sum / Rational(static_cast<std::int64_t>(group_->order()));
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& rhs) {
  if (group_.get() != rhs.group_.get()) {
    throw std::invalid_argument("ClassFunction: mixed groups");
  }
  for (std::size_t c = 0; c < values_.size(); ++c) values_[c] += rhs.values_[c];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& rhs) {
  if (group_.get() != rhs.group_.get()) {
    throw std::invalid_argument("ClassFunction: mixed groups");
  }
  for (std::size_t c = 0; c < values_.size(); ++c) values_[c] -= rhs.values_[c];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& scalar) {
  for (auto& v : values_) v *= scalar;
  return *this;
}

ClassFunction induce(const Subgroup& h, const ClassFunction& phi) {
  if (phi.group_ref().get() != &h.group()) {
    throw std::invalid_argument("induce: phi is not a class function on H");
  }
  const FiniteGroup& g = h.parent();
  const FiniteGroup& sub = h.group();

  // Elementwise evaluation over all of G, then verify class constancy.
  std::vector<Rational> at_element(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    Rational sum(0);
    for (const auto& rep : h.transversal()) {
      Permutation t = conjugate(g.element(i), rep);
      if (auto idx = sub.index_of(t)) {
        sum += phi.value_on_class(sub.class_of_index(*idx));
      }
    }
    at_element[i] = sum;
  }

  std::vector<Rational> class_values(g.class_count());
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    const auto& members = g.classes()[c];
    class_values[c] = at_element[members.front()];
    for (std::size_t m : members) {
      if (!(at_element[m] == class_values[c])) {
        throw std::logic_error("induce: result not constant on a conjugacy class");
      }
    }
  }
  return ClassFunction(h.parent_ref(), std::move(class_values));
}

Rational reciprocity_gap(const Subgroup& h, const ClassFunction& phi) {
  return phi.mean() - induce(h, phi).mean();
}

CyclicInductionData sigma_phi(const GroupRef& g, const Permutation& sigma) {
  if (!g->contains(sigma)) {
    throw std::invalid_argument("sigma_phi: sigma outside the group");
  }
  Subgroup h(g, {sigma});
  const std::uint64_t n = sigma.order();

  std::vector<Rational> values(h.group().class_count());
  for (std::uint64_t e = 1; e <= n; ++e) {
    if (n % e != 0) continue;
    Permutation pe = power(sigma, e);
    auto c_e = static_cast<std::int64_t>(g->centralizer_order(pe));
    values[h.group().class_of(pe)] += Rational(static_cast<std::int64_t>(n), c_e);
  }
  ClassFunction phi(h.group_ref(), std::move(values));
  return CyclicInductionData{std::move(h), std::move(phi)};
}

}  // namespace cheblab
