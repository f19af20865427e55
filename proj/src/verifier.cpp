#include "subtile/verifier.hpp"

#include "subtile/detail/parallel.hpp"
#include "subtile/fourier.hpp"
#include "subtile/report_json.hpp"

#include <cmath>
#include <random>

namespace subtile {

namespace {

IdentityChecks sample_identities(const LatticeSubgroup& lattice, const MeasuredSet& omega,
                                 std::mt19937_64& rng) {
  const auto& group = lattice.parent();
  const std::size_t n = group.order();
  IdentityChecks checks;

  const auto f = random_function(n, rng);
  const auto weil = weil_check(lattice, f);
  checks.weil = std::abs(weil.lhs - weil.rhs);

  const auto h = random_function(n, rng);
  const auto ff = fourier_transform(group, f).values;
  const auto fh = fourier_transform(group, h).values;
  checks.plancherel = std::abs(group.dual_inner_product(ff, fh) - group.inner_product(f, h));

  const auto b = bracket(lattice, f, h);
  for (auto lambda : lattice.element_indices()) {
    checks.bracket = std::max(checks.bracket, std::abs(translate_inner_product(group, f, h, lambda) -
                                                       bracket_integral(lattice, b, lambda)));
  }

  const auto coefficients = coefficient_identities(lattice, omega);
  checks.coefficients = coefficients.max_discrepancy;
  checks.coefficient_scale = coefficients.scale;

  FunctionTable phi = omega.indicator();
  const double scale = 1.0 / std::sqrt(to_double(omega.measure()));
  for (auto& v : phi) v *= scale;
  const auto routes = orthonormal_translates(lattice, phi, checks.tolerance);
  checks.orthonormality_routes_agree = routes.by_inner_products == routes.by_bracket;

  const auto sizes = lattice_sizes(lattice);
  checks.primal_size = sizes.primal;
  checks.dual_size = sizes.dual;
  return checks;
}

}  // namespace

EquivalenceReport verify_triple(const LatticeSubgroup& lattice, const MeasuredSet& omega,
                                const VerifyOptions& options) {
  if (omega.empty()) throw PreconditionError("Omega must be nonempty");
  const auto& group = lattice.parent();
  const double tol = options.tolerance;
  const FrameTolerances frame_tol{tol, tol};

  EquivalenceReport report;
  report.group = group.cyclic_orders();
  report.weight_g = group.weight_g();
  report.lattice = lattice.element_indices();
  report.annihilator = annihilator(lattice).character_indices();
  report.cross_section = cross_section(lattice).indices;
  report.omega = omega.indices();
  report.seed = options.seed;
  report.tolerance = tol;

  report.tiling = check_subtiling(lattice, omega);
  report.condition1 = report.tiling.is_subtiling;

  report.condition2_evidence = check_condition2(lattice, omega, tol);
  report.condition2 = report.condition2_evidence.is_constant;
  report.power_spectrum = periodized_power_spectrum(lattice, omega);

  report.condition3_evidence = translate_orthonormality_evidence(lattice, omega, tol);
  report.condition3 = report.condition3_evidence.by_gram && report.condition3_evidence.by_spectrum;

  const ExponentialSystem system(lattice, omega);
  report.condition4_evidence = frame_bounds(frame_operator(system), frame_tol);
  report.condition4 = report.condition4_evidence.is_frame;

  const auto window = options.psi ? ModulationWindow::from_values(*options.psi)
                                  : ModulationWindow::ramp(omega.count());
  report.psi = window.values();
  report.condition5_evidence = modulated_frame_report(system, window, frame_tol);
  report.condition5 = report.condition5_evidence.holds();

  report.orthogonal_basis = check_orthogonal_basis(system, tol);
  if (!report.condition1) report.witness = obstruction_witness(lattice, omega);

  const bool c = report.condition1;
  report.consistent = report.condition2 == c && report.condition3 == c && report.condition4 == c &&
                      report.condition5 == c;
  report.tight_constant_observed = report.condition4_evidence.tight_constant.value_or(0.0);
  const double lattice_size = to_double(lattice_sizes(lattice).primal);
  report.tight_constant_matches =
      !(report.consistent && c) ||
      (report.condition4_evidence.is_tight &&
       std::abs(report.tight_constant_observed - lattice_size) < tol);

  std::mt19937_64 rng(options.seed);
  report.identities = sample_identities(lattice, omega, rng);
  return report;
}

EquivalenceReport verify_triple(const Config& config) {
  if (!config.omega || config.omega->empty()) throw ConfigError(0, "omega is required and must be nonempty");
  const auto group = build_group(config);
  const auto lattice = build_lattice(group, config);
  const auto omega = build_omega(group, *config.omega);
  VerifyOptions options;
  options.psi = config.psi;
  options.tolerance = config.tolerance;
  options.seed = config.seed;
  return verify_triple(lattice, omega, options);
}

void require_consistent(const EquivalenceReport& report) {
  if (report.ok()) return;
  std::string what = "verification failed:";
  if (!report.consistent) what += " condition verdicts disagree;";
  if (!report.tight_constant_matches) what += " tight constant differs from |Q_L|;";
  if (!report.identities.hold()) what += " an identity check exceeded tolerance;";
  throw InconsistencyError(what, to_json(report).dump(2));
}

FugledeReport fuglede_suite(const FiniteAbelianGroup& group, const FugledeOptions& options) {
  const std::size_t n = group.order();
  FugledeReport report;
  report.group = group.cyclic_orders();
  report.seed = options.seed;
  report.exhaustive = n < 63 && (std::uint64_t{1} << n) <= options.cap;
  report.subsets_per_lattice = report.exhaustive ? (std::size_t{1} << n) : options.cap;

  // Subsets as index lists, shared by all lattices.
  std::vector<std::vector<std::size_t>> subsets;
  subsets.reserve(report.subsets_per_lattice);
  if (report.exhaustive) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<std::size_t> points;
      for (std::size_t g = 0; g < n; ++g) {
        if (mask >> g & 1U) points.push_back(g);
      }
      subsets.push_back(std::move(points));
    }
  } else {
    std::mt19937_64 rng(options.seed);
    std::bernoulli_distribution keep(0.5);
    for (std::size_t s = 0; s < options.cap; ++s) {
      std::vector<std::size_t> points;
      for (std::size_t g = 0; g < n; ++g) {
        if (keep(rng)) points.push_back(g);
      }
      subsets.push_back(std::move(points));
    }
  }

  const auto lattices = all_subgroups(group);
  report.rows.resize(lattices.size());
  detail::parallel_for(lattices.size(), [&](std::size_t i) {
    const auto& lattice = lattices[i];
    auto& row = report.rows[i];
    row.lattice = lattice.element_indices();
    for (const auto& points : subsets) {
      const MeasuredSet omega(group, points);
      const bool tiles = !omega.empty() && check_subtiling(lattice, omega).is_tiling;
      const bool basis = check_orthogonal_basis(ExponentialSystem(lattice, omega));
      ++row.cases;
      row.tilings += tiles;
      row.orthogonal_bases += basis;
      if (tiles != basis) {
        ++row.disagreements;
        if (row.examples.size() < 5) row.examples.push_back(points);
      }
    }
  });
  for (const auto& row : report.rows) {
    report.total_cases += row.cases;
    report.total_disagreements += row.disagreements;
  }
  return report;
}

}  // namespace subtile
