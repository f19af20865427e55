#include "oracles.hpp"
#include "subtile/fourier.hpp"
#include "subtile/identities.hpp"

#include <doctest.h>

#include <random>

using namespace subtile;

namespace {

LatticeSubgroup span(const FiniteAbelianGroup& g, std::vector<std::size_t> gens) {
  return subgroup_from_index_generators(g, gens);
}

MeasuredSet set_of(const FiniteAbelianGroup& g, std::vector<std::size_t> pts) {
  return MeasuredSet(g, std::move(pts));
}

double max_abs_diff(const FunctionTable& a, const FunctionTable& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

const std::vector<std::vector<std::int64_t>> kGroups{{4}, {6}, {8}, {12}, {2, 2}, {2, 4}, {3, 3}, {2, 2, 2}, {4, 6}};

}  // namespace

TEST_CASE("transform of simple functions") {
  const FiniteAbelianGroup z4({4});
  FunctionTable delta(4, 0.0);
  delta[0] = 1.0;
  for (const auto& v : fourier_transform(z4, delta).values) CHECK(std::abs(v - 1.0) < 1e-15);

  const auto f = set_of(z4, {0, 1}).indicator();
  const auto spec = fourier_transform(z4, f).values;
  const double expected[] = {4, 2, 0, 2};
  for (std::size_t chi = 0; chi < 4; ++chi) CHECK(std::norm(spec[chi]) == doctest::Approx(expected[chi]).epsilon(1e-14));
  CHECK_THROWS_AS(fourier_transform(z4, FunctionTable(3)), StructuralError);
}

TEST_CASE("direct and separable transforms match a brute-force oracle; inversion recovers f") {
  std::mt19937_64 rng(21);
  for (const auto& orders : kGroups) {
    for (const Rational w : {Rational(1), Rational(1, 2), Rational(3)}) {
      const FiniteAbelianGroup g(orders, w);
      const auto f = random_function(g.order(), rng);
      const auto direct = fourier_transform(g, f).values;
      const auto fast = fourier_transform(g, f, TransformMethod::separable).values;
      CHECK(max_abs_diff(direct, oracle::transform(orders, to_double(w), f)) < 1e-11);
      CHECK(max_abs_diff(direct, fast) < 1e-11);
      CHECK(max_abs_diff(inverse_fourier_transform(g, {direct}), f) < 1e-12);
    }
  }
}

TEST_CASE("Plancherel on every fixture") {
  std::mt19937_64 rng(22);
  for (const auto& orders : kGroups) {
    const FiniteAbelianGroup g(orders, Rational(1, 2));
    for (int t = 0; t < 20; ++t) {
      const auto f = random_function(g.order(), rng);
      const auto h = random_function(g.order(), rng);
      const auto ff = fourier_transform(g, f).values;
      const auto fh = fourier_transform(g, h).values;
      CHECK(std::abs(g.dual_inner_product(ff, ff) - g.inner_product(f, f)) < 1e-12);
      CHECK(std::abs(g.dual_inner_product(ff, fh) - g.inner_product(f, h)) < 1e-12);
    }
  }
}

TEST_CASE("bracket examples") {
  const FiniteAbelianGroup z4({4});
  const auto l = span(z4, {2});
  FunctionTable phi = set_of(z4, {0, 1}).indicator();
  for (auto& v : phi) v /= std::sqrt(2.0);
  const auto b = bracket(l, phi, phi);
  REQUIRE(b.values.size() == 2);
  CHECK(b.base_points.indices == std::vector<std::size_t>{0, 1});
  for (const auto& v : b.values) CHECK(std::abs(v - 1.0) < 1e-14);

  const FunctionTable zero(4, 0.0);
  for (const auto& v : bracket(l, zero, zero).values) CHECK(std::abs(v) == 0.0);
}

TEST_CASE("bracket reproduces translate inner products and is nonnegative on the diagonal") {
  std::mt19937_64 rng(23);
  for (const auto& orders : kGroups) {
    const FiniteAbelianGroup g(orders, Rational(3));
    for (const auto& l : all_subgroups(g)) {
      const auto phi = random_function(g.order(), rng);
      const auto psi = random_function(g.order(), rng);
      const auto b = bracket(l, phi, psi);
      CHECK(b.values.size() == l.size());
      for (auto lambda : l.element_indices()) {
        CHECK(std::abs(translate_inner_product(g, phi, psi, lambda) - bracket_integral(l, b, lambda)) < 1e-10);
      }
      for (const auto& v : bracket(l, phi, phi).values) {
        CHECK(std::abs(v.imag()) < 1e-12);
        CHECK(v.real() >= -1e-12);
      }
    }
  }
}

TEST_CASE("translate inner product against a direct sum") {
  const FiniteAbelianGroup z6({6});
  std::mt19937_64 rng(24);
  const auto phi = random_function(6, rng);
  const auto psi = random_function(6, rng);
  for (std::size_t lambda = 0; lambda < 6; ++lambda) {
    Complex s = 0.0;
    for (std::size_t x = 0; x < 6; ++x) s += phi[x] * std::conj(psi[(x + 6 - lambda) % 6]);
    CHECK(std::abs(translate_inner_product(z6, phi, psi, lambda) - s) < 1e-14);
  }
}

TEST_CASE("periodized power spectrum") {
  const FiniteAbelianGroup z4({4});
  const auto l = span(z4, {2});
  for (const auto& v : periodized_power_spectrum(l, set_of(z4, {0, 1}))) CHECK(std::abs(v - 4.0) < 1e-14);
  const auto h = periodized_power_spectrum(l, set_of(z4, {0, 2}));
  const double expected[] = {8, 0, 8, 0};
  for (std::size_t chi = 0; chi < 4; ++chi) CHECK(std::abs(h[chi] - expected[chi]) < 1e-14);
  for (const auto& v : periodized_power_spectrum(l, set_of(z4, {}))) CHECK(v == Complex(0.0));
}

TEST_CASE("power spectrum is periodic under the annihilator") {
  std::mt19937_64 rng(25);
  for (const auto& orders : kGroups) {
    const FiniteAbelianGroup g(orders);
    for (const auto& l : all_subgroups(g)) {
      const auto h = periodized_power_spectrum(l, random_subset(g, rng));
      const auto perp = annihilator(l);
      for (auto mu : perp.character_indices()) {
        for (std::size_t chi = 0; chi < g.order(); ++chi) CHECK(std::abs(h[g.add_index(chi, mu)] - h[chi]) < 1e-10);
      }
    }
  }
}

TEST_CASE("periodization counts") {
  const FiniteAbelianGroup z4({4});
  const auto l = span(z4, {2});
  CHECK(periodization(l, set_of(z4, {0, 1})) == std::vector<std::int64_t>{1, 1});
  CHECK(periodization(l, set_of(z4, {0, 2})) == std::vector<std::int64_t>{2, 0});
  CHECK(periodization(l, set_of(z4, {})) == std::vector<std::int64_t>{0, 0});
}

TEST_CASE("coefficient identities") {
  const FiniteAbelianGroup z4({4});
  const auto l = span(z4, {2});
  const auto r = coefficient_identities(l, set_of(z4, {0, 1}));
  REQUIRE(r.power_spectrum_coefficients.size() == 2);
  CHECK(std::abs(r.power_spectrum_coefficients[0] - 4.0) < 1e-14);
  CHECK(std::abs(r.overlap_side[0] - 4.0) < 1e-14);
  CHECK(std::abs(r.power_spectrum_coefficients[1]) < 1e-14);
  CHECK(r.max_discrepancy < 1e-14);

  std::mt19937_64 rng(26);
  const FiniteAbelianGroup z6({6});
  const auto l6 = span(z6, {2});
  for (int t = 0; t < 50; ++t) {
    const auto omega = random_subset(z6, rng);
    const auto section = randomized_cross_section(l6, rng);
    const auto dual_section = randomized_cross_section(annihilator(l6).as_subgroup(), rng);
    CHECK(coefficient_identities(l6, omega, section, dual_section).max_discrepancy < 1e-10);
  }
  for (const auto& orders : kGroups) {
    const FiniteAbelianGroup g(orders, Rational(1, 2));
    for (const auto& lat : all_subgroups(g)) {
      CHECK(coefficient_identities(lat, random_subset(g, rng)).max_discrepancy < 1e-10);
    }
  }
}

TEST_CASE("orthonormal translates: both routes agree on constructed examples") {
  std::mt19937_64 rng(27);
  for (const auto& orders : kGroups) {
    const FiniteAbelianGroup g(orders);
    for (const auto& l : all_subgroups(g)) {
      // orthonormal by construction
      const auto sub = random_subtiling_set(l, rng);
      FunctionTable phi(g.order(), 0.0);
      for (auto x : sub.indices()) phi[x] = std::polar(1.0 / std::sqrt(static_cast<double>(sub.count())), 0.7 * x);
      const auto yes = orthonormal_translates(l, phi, 1e-9);
      CHECK(yes.by_inner_products);
      CHECK(yes.by_bracket);

      // two points in one coset: not orthonormal unless the lattice is trivial
      if (l.size() > 1) {
        FunctionTable bad(g.order(), 0.0);
        bad[0] = bad[l.element_indices()[1]] = 1.0 / std::sqrt(2.0);
        const auto no = orthonormal_translates(l, bad, 1e-9);
        CHECK_FALSE(no.by_inner_products);
        CHECK_FALSE(no.by_bracket);
      }
    }
  }
}
