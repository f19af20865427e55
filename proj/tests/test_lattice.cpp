#include "oracles.hpp"
#include "subtile/identities.hpp"
#include "subtile/lattice.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace subtile;

namespace {

LatticeSubgroup span1(const FiniteAbelianGroup& g, std::vector<std::int64_t> gen) {
  const std::vector<GroupElement> gens{GroupElement{std::move(gen)}};
  return subgroup_from_generators(g, gens);
}

std::vector<std::vector<std::int64_t>> fixtures() {
  return {{4}, {6}, {8}, {12}, {2, 2}, {2, 4}, {3, 3}, {2, 2, 2}, {4, 6}};
}

/// Brute-force list of subgroups: closures of all pairs of elements.
std::set<std::vector<std::size_t>> brute_subgroups(const FiniteAbelianGroup& g) {
  std::set<std::vector<std::size_t>> out;
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = a; b < g.order(); ++b) {
      for (std::size_t c = b; c < g.order(); ++c) {
        const std::vector<std::size_t> gens{a, b, c};
        out.insert(subgroup_from_index_generators(g, gens).element_indices());
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("closure from generators") {
  const FiniteAbelianGroup z4({4});
  const auto l = span1(z4, {2});
  CHECK(l.element_indices() == std::vector<std::size_t>{0, 2});
  CHECK(l.index() == 2);

  const FiniteAbelianGroup k4({2, 2});
  const auto d = span1(k4, {1, 1});
  CHECK(d.elements() == std::vector<GroupElement>{GroupElement{{0, 0}}, GroupElement{{1, 1}}});
  CHECK(d.index() == 2);

  const auto trivial = subgroup_from_generators(z4, {});
  CHECK(trivial.element_indices() == std::vector<std::size_t>{0});
  CHECK(trivial.index() == 4);

  const FiniteAbelianGroup z12({12});
  const std::vector<std::size_t> gens{8, 6};
  CHECK(subgroup_from_index_generators(z12, gens).element_indices() ==
        std::vector<std::size_t>{0, 2, 4, 6, 8, 10});
  CHECK_THROWS_AS(span1(z4, {1, 1}), StructuralError);
}

TEST_CASE("subgroup invariants and the list of all subgroups") {
  for (const auto& orders : fixtures()) {
    const FiniteAbelianGroup g(orders);
    const auto subs = all_subgroups(g);
    std::set<std::vector<std::size_t>> listed;
    for (const auto& l : subs) {
      listed.insert(l.element_indices());
      CHECK(l.size() * l.index() == g.order());
      CHECK(l.contains_index(0));
      for (auto a : l.element_indices()) {
        CHECK(l.contains_index(g.neg_index(a)));
        for (auto b : l.element_indices()) CHECK(l.contains_index(g.add_index(a, b)));
      }
    }
    CHECK(listed.size() == subs.size());
    CHECK(listed == brute_subgroups(g));
  }
  CHECK(all_subgroups(FiniteAbelianGroup({12})).size() == 6);
  CHECK(all_subgroups(FiniteAbelianGroup({2, 2})).size() == 5);
  CHECK(all_subgroups(FiniteAbelianGroup({2, 4})).size() == 8);
}

TEST_CASE("annihilator examples") {
  const FiniteAbelianGroup z4({4});
  CHECK(annihilator(span1(z4, {2})).character_indices() == std::vector<std::size_t>{0, 2});
  const FiniteAbelianGroup k4({2, 2});
  CHECK(annihilator(span1(k4, {1, 1})).characters() ==
        std::vector<Character>{Character{{0, 0}}, Character{{1, 1}}});
  CHECK(annihilator(span1(z4, {1})).character_indices() == std::vector<std::size_t>{0});
  CHECK(annihilator(subgroup_from_generators(z4, {})).size() == 4);
}

TEST_CASE("annihilator matches brute force and biduality holds for |G| <= 64") {
  std::vector<std::vector<std::int64_t>> groups = fixtures();
  groups.push_back({2, 2, 2, 2, 2, 2});
  groups.push_back({8, 8});
  groups.push_back({4, 4, 4});
  for (const auto& orders : groups) {
    const FiniteAbelianGroup g(orders);
    for (const auto& l : all_subgroups(g)) {
      const auto perp = annihilator(l);
      CHECK(perp.character_indices() == oracle::annihilator(orders, l.element_indices()));
      CHECK(perp.size() == l.index());
      CHECK(annihilator(perp.as_subgroup()).as_subgroup() == l);
    }
  }
}

TEST_CASE("cross sections") {
  const FiniteAbelianGroup z4({4});
  const auto q = cross_section(span1(z4, {2}));
  CHECK(q.indices == std::vector<std::size_t>{0, 1});
  CHECK(q.size == Rational(2));

  const FiniteAbelianGroup k4({2, 2});
  CHECK(cross_section(span1(k4, {1, 1})).representatives ==
        std::vector<GroupElement>{GroupElement{{0, 0}}, GroupElement{{0, 1}}});
  CHECK(cross_section(subgroup_from_generators(z4, {})).indices == std::vector<std::size_t>{0, 1, 2, 3});

  std::mt19937_64 rng(5);
  for (const auto& orders : fixtures()) {
    const FiniteAbelianGroup g(orders, Rational(1, 2));
    for (const auto& l : all_subgroups(g)) {
      for (int trial = 0; trial < 3; ++trial) {
        const auto section = trial == 0 ? cross_section(l) : randomized_cross_section(l, rng);
        CHECK(section.indices.size() == l.index());
        CHECK(section.size == Rational(static_cast<std::int64_t>(l.index()), 2));
        // every g is q + lambda for exactly one pair
        std::vector<int> hits(g.order(), 0);
        for (auto q : section.indices) {
          for (auto lam : l.element_indices()) ++hits[g.add_index(q, lam)];
        }
        CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
      }
    }
  }
}

TEST_CASE("lattice sizes") {
  const FiniteAbelianGroup z4({4});
  auto s = lattice_sizes(span1(z4, {2}));
  CHECK(s.primal == Rational(2));
  CHECK(s.dual == Rational(1, 2));
  s = lattice_sizes(span1(z4, {1}));
  CHECK(s.primal == Rational(1));
  CHECK(s.dual == Rational(1));
  const FiniteAbelianGroup z6({6});
  s = lattice_sizes(span1(z6, {3}));
  CHECK(s.primal == Rational(3));
  CHECK(s.dual == Rational(1, 3));

  for (const auto& orders : fixtures()) {
    for (const Rational w : {Rational(1), Rational(1, 2), Rational(3)}) {
      const FiniteAbelianGroup g(orders, w);
      for (const auto& l : all_subgroups(g)) {
        const auto sz = lattice_sizes(l);
        CHECK(sz.primal * sz.dual == Rational(1));
        CHECK(sz.primal == w * static_cast<std::int64_t>(l.index()));
      }
    }
  }
}

TEST_CASE("Weil's formula") {
  const FiniteAbelianGroup z4({4});
  FunctionTable delta(4, 0.0);
  delta[0] = 1.0;
  auto sides = weil_check(span1(z4, {2}), delta);
  CHECK(std::abs(sides.lhs - 1.0) < 1e-15);
  CHECK(std::abs(sides.rhs - 1.0) < 1e-15);

  const FunctionTable ones(4, 1.0);
  sides = weil_check(span1(z4, {2}), ones);
  CHECK(std::abs(sides.lhs - 4.0) < 1e-15);
  CHECK(std::abs(sides.rhs - 4.0) < 1e-15);

  std::mt19937_64 rng(17);
  const FiniteAbelianGroup z6({6});
  const auto l = span1(z6, {2});
  for (int t = 0; t < 100; ++t) {
    const auto f = random_function(6, rng);
    const auto w = weil_check(l, f, randomized_cross_section(l, rng));
    CHECK(std::abs(w.lhs - w.rhs) < 1e-12);
  }
  CHECK_THROWS_AS(weil_check(l, FunctionTable(5)), StructuralError);
}
