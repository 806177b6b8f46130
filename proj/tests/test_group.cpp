#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "cheblab/group.hpp"

using namespace cheblab;

namespace {

GroupRef s3() {
  return make_group({parse_cycles("(1 2 3)", 3), parse_cycles("(1 2)", 3)});
}

GroupRef s4() {
  return make_group({parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 2)", 4)});
}

}  // namespace

TEST_CASE("group generation") {
  GroupRef g = s3();
  CHECK(g->order() == 6);
  CHECK(g->degree() == 3);
  std::vector<std::size_t> class_sizes;
  for (std::size_t c = 0; c < g->class_count(); ++c) class_sizes.push_back(g->class_size(c));
  std::sort(class_sizes.begin(), class_sizes.end());
  CHECK(class_sizes == std::vector<std::size_t>{1, 2, 3});

  CHECK(make_group({Permutation::identity(4)})->order() == 1);
  CHECK_THROWS_AS(FiniteGroup::generate({}), std::invalid_argument);

  GroupRef s5 = make_group({parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2)", 5)});
  CHECK(s5->order() == 120);
  CHECK_THROWS_AS(FiniteGroup::generate(
                      {parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2)", 5)}, 100),
                  std::length_error);
}

TEST_CASE("element ordering and classes") {
  GroupRef g = s3();
  // Sorted elements: identity first, classes sorted by least representative.
  CHECK(g->element(0) == Permutation::identity(3));
  CHECK(g->class_of(Permutation::identity(3)) == 0);
  CHECK(g->class_representative(1) == parse_cycles("(2 3)", 3));
  CHECK(g->class_representative(2) == parse_cycles("(1 2 3)", 3));
  CHECK(g->class_of(parse_cycles("(1 3)", 3)) == g->class_of(parse_cycles("(1 2)", 3)));

  std::size_t total = 0;
  for (std::size_t c = 0; c < g->class_count(); ++c) total += g->class_size(c);
  CHECK(total == g->order());

  CHECK_THROWS_AS(g->class_of(parse_cycles("(1 2)(3 4)", 4)), std::invalid_argument);
}

TEST_CASE("centralizer orders") {
  GroupRef g = s3();
  CHECK(g->centralizer_order(Permutation::identity(3)) == 6);
  CHECK(g->centralizer_order(parse_cycles("(1 2 3)", 3)) == 3);
  CHECK(g->centralizer_order(parse_cycles("(1 2)", 3)) == 2);
  CHECK_THROWS_AS(g->centralizer_order(parse_cycles("(1 2)", 4)), std::invalid_argument);

  // Orbit-stabilizer over all of S4.
  GroupRef g4 = s4();
  for (const auto& h : g4->elements()) {
    CHECK(g4->centralizer_order(h) * g4->class_size(g4->class_of(h)) == g4->order());
  }
}

TEST_CASE("power_class") {
  GroupRef g = s3();
  const std::size_t cycles = g->class_of(parse_cycles("(1 2 3)", 3));
  CHECK(g->power_class(cycles, 1) == cycles);
  CHECK(g->power_class(cycles, 3) == 0);
  CHECK(g->power_class(cycles, 2) == cycles);
  // Representative independence, brute force over all members of all classes.
  GroupRef g4 = s4();
  for (std::size_t c = 0; c < g4->class_count(); ++c) {
    for (std::uint64_t e = 1; e <= 6; ++e) {
      const std::size_t expected = g4->power_class(c, e);
      for (std::size_t m : g4->classes()[c]) {
        CHECK(g4->class_of(power(g4->element(m), e)) == expected);
      }
    }
  }
}

TEST_CASE("coset orbits and fixed cosets") {
  GroupRef g = s3();
  Subgroup h(g, {parse_cycles("(2 3)", 3)});
  CHECK(h.order() == 2);
  CHECK(h.index() == 3);

  CHECK(h.orbit_sizes_on_cosets(Permutation::identity(3)) ==
        std::vector<std::size_t>{1, 1, 1});
  CHECK(h.orbit_sizes_on_cosets(parse_cycles("(1 2 3)", 3)) == std::vector<std::size_t>{3});
  CHECK(h.orbit_sizes_on_cosets(parse_cycles("(1 2)", 3)) == std::vector<std::size_t>{1, 2});

  CHECK(h.fixed_coset_conjugates(Permutation::identity(3)) ==
        std::vector<Permutation>(3, Permutation::identity(3)));
  const auto fixed_t = h.fixed_coset_conjugates(parse_cycles("(1 2)", 3));
  REQUIRE(fixed_t.size() == 1);
  CHECK(h.contains(fixed_t.front()));
  CHECK(h.fixed_coset_conjugates(parse_cycles("(1 2 3)", 3)).empty());

  CHECK_THROWS_AS(h.orbit_sizes_on_cosets(parse_cycles("(1 2)(3 4)", 4)),
                  std::invalid_argument);

  // Fixed-coset count equals the number of size-1 orbits, and orbit sizes sum
  // to [G:H], for every subgroup of S4 and every element.
  GroupRef g4 = s4();
  for (const auto& sub : all_subgroups(g4)) {
    for (const auto& s : g4->elements()) {
      const auto sizes = sub.orbit_sizes_on_cosets(s);
      std::size_t sum = 0;
      std::size_t ones = 0;
      for (auto v : sizes) {
        sum += v;
        if (v == 1) ++ones;
      }
      CHECK(sum == sub.index());
      CHECK(sub.fixed_coset_conjugates(s).size() == ones);
    }
  }
}

TEST_CASE("subgroup validation") {
  GroupRef g = s3();
  CHECK_THROWS_AS(Subgroup(g, {parse_cycles("(1 2 3 4)", 4)}), std::exception);

  Subgroup h(g, {parse_cycles("(2 3)", 3)});
  // Lagrange.
  CHECK(g->order() == h.index() * h.order());

  // Custom transversals are validated.
  std::vector<Permutation> reversed = h.transversal();
  std::reverse(reversed.begin(), reversed.end());
  Subgroup alt(g, {parse_cycles("(2 3)", 3)}, reversed);
  for (const auto& s : g->elements()) {
    CHECK(alt.orbit_sizes_on_cosets(s) == h.orbit_sizes_on_cosets(s));
  }
  CHECK_THROWS_AS(Subgroup(g, {parse_cycles("(2 3)", 3)},
                           {Permutation::identity(3)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Subgroup(g, {parse_cycles("(2 3)", 3)},
                           {Permutation::identity(3), parse_cycles("(2 3)", 3),
                            parse_cycles("(1 2 3)", 3)}),
                  std::invalid_argument);
}

TEST_CASE("subgroup enumeration") {
  CHECK(all_subgroup_element_sets(*s3()).size() == 6);
  CHECK(all_subgroup_element_sets(
            *make_group({parse_cycles("(1 2 3 4 5 6)", 6)}))
            .size() == 4);
  GroupRef a4 = make_group({parse_cycles("(1 2 3)", 4), parse_cycles("(1 2)(3 4)", 4)});
  CHECK(a4->order() == 12);
  CHECK(all_subgroup_element_sets(*a4).size() == 10);

  // S4: compare against an independent oracle closing all generator pairs
  // (every subgroup of S4 is generated by at most two elements).
  GroupRef g4 = s4();
  const auto enumerated = all_subgroup_element_sets(*g4);
  CHECK(enumerated.size() == 30);

  std::set<std::vector<std::size_t>> oracle;
  const std::size_t n = g4->order();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      std::set<Permutation> closure{Permutation::identity(4)};
      std::vector<Permutation> frontier(closure.begin(), closure.end());
      std::vector<Permutation> gens{g4->element(a), g4->element(b)};
      while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& p : frontier) {
          for (const auto& gen : gens) {
            Permutation q = compose(gen, p);
            if (closure.insert(q).second) next.push_back(q);
          }
        }
        frontier = std::move(next);
      }
      std::vector<std::size_t> indices;
      for (const auto& p : closure) indices.push_back(*g4->index_of(p));
      std::sort(indices.begin(), indices.end());
      oracle.insert(std::move(indices));
    }
  }
  CHECK(oracle.size() == enumerated.size());
  for (const auto& sub : enumerated) CHECK(oracle.count(sub) == 1);

  // Every enumerated subgroup satisfies Lagrange.
  for (const auto& sub : enumerated) CHECK(g4->order() % sub.size() == 0);
}
