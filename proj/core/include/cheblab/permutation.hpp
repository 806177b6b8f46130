#ifndef CHEBLAB_PERMUTATION_HPP
#define CHEBLAB_PERMUTATION_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cheblab {

/// Permutation of {0, ..., degree-1}, stored as its image table.
///
/// Composition convention used throughout the library:
///     compose(a, b)(x) = a(b(x))
/// i.e. b acts first.  Cycle-notation I/O is 1-based ("(1 2 3)(4 5)",
/// whitespace-separated points, "()" for the identity); the internal
/// point labels are 0-based.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Sorted multiset of cycle lengths (fixed points included), summing to
  /// the degree.
  std::vector<int> cycle_type() const;

  /// Multiplicative order (lcm of cycle lengths).
  std::uint64_t order() const;

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

/// compose(a, b)(x) = a(b(x)); degrees must match.
Permutation compose(const Permutation& a, const Permutation& b);

/// g^-1 * p * g under the convention above: x -> g^-1(p(g(x))).
Permutation conjugate(const Permutation& p, const Permutation& g);

/// p composed with itself e times (e >= 0; e = 0 gives the identity).
Permutation power(const Permutation& p, std::uint64_t e);

/// Parses 1-based cycle notation, e.g. "(1 2 3)(4 5)".  Points not named are
/// fixed.  Throws std::invalid_argument on malformed input, repeated points,
/// or points outside 1..degree.
Permutation parse_cycles(std::string_view text, int degree);

/// Canonical cycle notation: cycles ordered by least moved point, fixed
/// points omitted, "()" for the identity.
std::string format_cycles(const Permutation& p);

}  // namespace cheblab

#endif
