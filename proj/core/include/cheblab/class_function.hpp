#ifndef CHEBLAB_CLASS_FUNCTION_HPP
#define CHEBLAB_CLASS_FUNCTION_HPP

#include <vector>

#include "cheblab/group.hpp"
#include "cheblab/rational.hpp"

namespace cheblab {

/// Rational-valued class function on a finite group: one exact value per
/// conjugacy class.  Pure value; immutable in practice and freely shareable.
class ClassFunction {
 public:
  ClassFunction(GroupRef group, std::vector<Rational> class_values);

  static ClassFunction zero(GroupRef group);
  static ClassFunction constant(GroupRef group, const Rational& value);
  static ClassFunction one(GroupRef group) { return constant(group, Rational(1)); }

  /// Indicator of the conjugacy class of h (a point mass when the group is
  /// abelian).  Throws std::invalid_argument when h is not a member.
  static ClassFunction delta_at(GroupRef group, const Permutation& h);

  /// Indicator of class `class_id`.  Throws std::invalid_argument on a bad id.
  static ClassFunction indicator(GroupRef group, std::size_t class_id);

  const GroupRef& group_ref() const { return group_; }
  const FiniteGroup& group() const { return *group_; }

  const Rational& value_on_class(std::size_t class_id) const { return values_[class_id]; }
  const std::vector<Rational>& class_values() const { return values_; }

  /// Value at a group element (throws when g is not a member).
  const Rational& operator()(const Permutation& g) const {
    return values_[group_->class_of(g)];
  }

  /// |G|^-1 sum over g in G of phi(g) = sum over classes of phi(C)|C|/|G|,
  /// computed exactly.
  Rational mean() const;

  ClassFunction& operator+=(const ClassFunction& rhs);
  ClassFunction& operator-=(const ClassFunction& rhs);
  ClassFunction& operator*=(const Rational& scalar);
  friend ClassFunction operator+(ClassFunction lhs, const ClassFunction& rhs) {
    return lhs += rhs;
  }
  friend ClassFunction operator-(ClassFunction lhs, const ClassFunction& rhs) {
    return lhs -= rhs;
  }
  friend ClassFunction operator*(const Rational& scalar, ClassFunction f) {
    return f *= scalar;
  }

  /// Same underlying group object and identical class values.
  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.group_.get() == b.group_.get() && a.values_ == b.values_;
  }

 private:
  GroupRef group_;
  std::vector<Rational> values_;
};

/// Induction of phi from H to the parent group G over the stored transversal:
/// phi'(g) = sum over transversal elements g_i of phi(g_i^-1 g g_i), with phi
/// extended by zero off H.  The result is evaluated at every element of G and
/// verified to be constant on conjugacy classes before it is returned.
ClassFunction induce(const Subgroup& h, const ClassFunction& phi);

/// mean_H(phi) - mean_G(induce(phi)); exactly zero (the mean form of
/// Frobenius reciprocity), exposed so tests can assert it.
Rational reciprocity_gap(const Subgroup& h, const ClassFunction& phi);

struct CyclicInductionData {
  Subgroup subgroup;    // H = <sigma>
  ClassFunction phi;    // sum over divisors e of n of delta_{sigma^e} * n/c_e
};

/// For sigma in G of order n builds H = <sigma> and the class function on H
/// with phi(sigma^e) = n / centralizer_order(G, sigma^e) for each divisor e of
/// n (0 elsewhere).  Its induction to G equals the sum of the class indicators
/// of the classes of sigma^e.
CyclicInductionData sigma_phi(const GroupRef& g, const Permutation& sigma);

}  // namespace cheblab

#endif
