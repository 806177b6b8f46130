#include "cheblab/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace cheblab {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v]) {
      throw std::invalid_argument("Permutation: image table is not a bijection");
    }
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<char> seen(images_.size(), 0);
  for (int start = 0; start < degree(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (int x = start; !seen[x]; x = images_[x]) {
      seen[x] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (int len : cycle_type()) result = std::lcm<std::uint64_t>(result, len);
  return result;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument("compose: degree mismatch");
  }
  std::vector<int> images(a.degree());
  for (int x = 0; x < a.degree(); ++x) images[x] = a(b(x));
  return Permutation(std::move(images));
}

Permutation conjugate(const Permutation& p, const Permutation& g) {
  return compose(g.inverse(), compose(p, g));
}

Permutation power(const Permutation& p, std::uint64_t e) {
  Permutation acc = Permutation::identity(p.degree());
  Permutation base = p;
  while (e > 0) {
    if (e & 1) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

Permutation parse_cycles(std::string_view text, int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> used(degree, 0);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  skip_ws();
  bool any_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("parse_cycles: expected '('");
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw std::invalid_argument("parse_cycles: expected point number");
      }
      int value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        ++i;
      }
      if (value < 1 || value > degree) {
        throw std::invalid_argument("parse_cycles: point " + std::to_string(value) +
                                    " outside 1.." + std::to_string(degree));
      }
      int point = value - 1;
      if (used[point]) {
        throw std::invalid_argument("parse_cycles: point " + std::to_string(value) +
                                    " repeated");
      }
      used[point] = 1;
      cycle.push_back(point);
      skip_ws();
    }
    if (i >= text.size()) throw std::invalid_argument("parse_cycles: unterminated cycle");
    ++i;  // ')'
    any_cycle = true;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    skip_ws();
  }
  if (!any_cycle) throw std::invalid_argument("parse_cycles: empty input");
  return Permutation(std::move(images));
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<char> seen(p.degree(), 0);
  for (int start = 0; start < p.degree(); ++start) {
    if (seen[start] || p(start) == start) {
      seen[start] = 1;
      continue;
    }
    out += '(';
    bool first = true;
    for (int x = start; !seen[x]; x = p(x)) {
      seen[x] = 1;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace cheblab
