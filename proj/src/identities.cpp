#include "subtile/identities.hpp"

#include "subtile/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace subtile {

FunctionTable random_function(std::size_t size, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  FunctionTable f(size);
  for (auto& v : f) {
    const double re = u(rng);
    v = {re, u(rng)};
  }
  return f;
}

MeasuredSet random_subset(const FiniteAbelianGroup& group, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(0.5);
  std::vector<std::size_t> points;
  while (points.empty()) {
    for (std::size_t g = 0; g < group.order(); ++g) {
      if (keep(rng)) points.push_back(g);
    }
  }
  return MeasuredSet(group, std::move(points));
}

MeasuredSet random_subtiling_set(const LatticeSubgroup& lattice, std::mt19937_64& rng) {
  const auto& group = lattice.parent();
  std::bernoulli_distribution keep(0.5);
  std::uniform_int_distribution<std::size_t> shift(0, lattice.size() - 1);
  std::uniform_int_distribution<std::size_t> coset(0, lattice.index() - 1);
  std::vector<std::size_t> points;
  for (auto leader : lattice.coset_leaders()) {
    if (keep(rng)) points.push_back(group.add_index(leader, lattice.element_indices()[shift(rng)]));
  }
  if (points.empty()) {
    const auto leader = lattice.coset_leaders()[coset(rng)];
    points.push_back(group.add_index(leader, lattice.element_indices()[shift(rng)]));
  }
  return MeasuredSet(group, std::move(points));
}

OrthonormalTranslates orthonormal_translates(const LatticeSubgroup& lattice, const FunctionTable& phi,
                                             double tolerance) {
  const auto& group = lattice.parent();
  OrthonormalTranslates out{true, true};
  for (auto lambda : lattice.element_indices()) {
    const Complex expected = lambda == 0 ? 1.0 : 0.0;
    if (std::abs(translate_inner_product(group, phi, phi, lambda) - expected) >= tolerance) {
      out.by_inner_products = false;
      break;
    }
  }
  const auto b = bracket(lattice, phi, phi);
  out.by_bracket = std::all_of(b.values.begin(), b.values.end(),
                               [&](const Complex& v) { return std::abs(v - 1.0) < tolerance; });
  return out;
}

IdentitySuiteReport run_identity_suite(const LatticeSubgroup& lattice,
                                       const IdentitySuiteOptions& options) {
  const auto& group = lattice.parent();
  const std::size_t n = group.order();
  std::mt19937_64 rng(options.seed);

  IdentitySuiteReport report;
  report.samples = options.samples;
  report.seed = options.seed;
  report.tolerance = options.tolerance;
  const auto sizes = lattice_sizes(lattice);
  report.size_product = sizes.primal * sizes.dual;

  const auto dual_lattice = annihilator(lattice);
  for (std::size_t s = 0; s < options.samples; ++s) {
    // Odd samples use a random cross section: the identities must not depend on the choice.
    const bool shuffled = s % 2 == 1;
    const auto section = shuffled ? randomized_cross_section(lattice, rng) : cross_section(lattice);
    const auto dual_section = shuffled ? randomized_cross_section(dual_lattice.as_subgroup(), rng)
                                       : cross_section(dual_lattice.as_subgroup());

    const auto f = random_function(n, rng);
    const auto weil = weil_check(lattice, f, section);
    report.weil = std::max(report.weil, std::abs(weil.lhs - weil.rhs));

    const auto h = random_function(n, rng);
    const auto ff = fourier_transform(group, f).values;
    const auto fh = fourier_transform(group, h).values;
    report.plancherel = std::max(
        report.plancherel, std::abs(group.dual_inner_product(ff, fh) - group.inner_product(f, h)));
    report.plancherel = std::max(
        report.plancherel, std::abs(group.dual_inner_product(ff, ff) - group.inner_product(f, f)));

    const auto b = bracket(lattice, f, h);
    for (auto lambda : lattice.element_indices()) {
      const auto direct = translate_inner_product(group, f, h, lambda);
      report.bracket = std::max(report.bracket, std::abs(direct - bracket_integral(lattice, b, lambda)));
    }

    const auto omega = random_subset(group, rng);
    report.coefficients = std::max(
        report.coefficients,
        coefficient_identities(lattice, omega, section, dual_section).max_discrepancy);

    // Orthonormal-translate characterization, alternating between generators
    // that are orthonormal by construction and generic ones.
    FunctionTable phi(n, 0.0);
    if (s % 2 == 0) {
      const auto sub = random_subtiling_set(lattice, rng);
      const double scale = 1.0 / std::sqrt(to_double(sub.measure()));
      std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
      for (auto g : sub.indices()) phi[g] = std::polar(scale, angle(rng));
    } else {
      phi = random_function(n, rng);
      const double norm = std::sqrt(group.inner_product(phi, phi).real());
      for (auto& v : phi) v /= norm;
    }
    const auto routes = orthonormal_translates(lattice, phi, options.tolerance);
    ++report.orthonormality_cases;
    if (routes.by_inner_products) ++report.orthonormal_cases;
    if (routes.by_inner_products != routes.by_bracket) ++report.orthonormality_disagreements;
  }
  return report;
}

}  // namespace subtile
