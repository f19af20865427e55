#include "subtile/frames.hpp"

#include "subtile/tiling.hpp"

#include <algorithm>
#include <cmath>

namespace subtile {

ExponentialSystem::ExponentialSystem(const LatticeSubgroup& lattice, MeasuredSet domain)
    : domain_(std::move(domain)),
      indices_(annihilator(lattice)),
      lattice_size_(lattice_sizes(lattice).primal) {
  if (!(lattice.parent() == domain_.parent())) {
    throw StructuralError("lattice and domain live in different groups");
  }
  const auto& group = lattice.parent();
  const auto& chars = indices_.character_indices();
  vectors_ = ComplexMatrix(chars.size(), domain_.count());
  for (std::size_t r = 0; r < chars.size(); ++r) {
    for (std::size_t c = 0; c < domain_.count(); ++c) {
      vectors_(r, c) = group.pairing_index(chars[r], domain_.indices()[c]);
    }
  }
}

ComplexMatrix frame_operator(const ExponentialSystem& system) {
  const auto& domain = system.domain();
  if (domain.empty()) throw PreconditionError("frame operator needs a nonempty domain");
  const auto& e = system.vectors();
  const std::size_t n = domain.count();
  const double w = domain.parent().weight();
  ComplexMatrix s(n, n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = g; h < n; ++h) {
      Complex sum = 0.0;
      for (std::size_t r = 0; r < e.rows(); ++r) sum += e(r, g) * std::conj(e(r, h));
      s(g, h) = w * sum;
      s(h, g) = std::conj(s(g, h));
    }
  }
  return s;
}

FrameReport frame_bounds(const ComplexMatrix& s, const FrameTolerances& tolerances) {
  FrameReport report;
  report.spectrum = hermitian_eigenvalues(s);
  if (report.spectrum.empty()) throw PreconditionError("frame operator is empty");
  // Clamp rounding noise so that 0 <= A <= B.
  report.lower_bound = std::max(0.0, report.spectrum.front());
  report.upper_bound = std::max(report.lower_bound, report.spectrum.back());
  report.is_frame = report.lower_bound > tolerances.frame;
  report.is_tight = report.upper_bound - report.lower_bound < tolerances.tight;
  if (report.is_tight) report.tight_constant = 0.5 * (report.lower_bound + report.upper_bound);
  return report;
}

bool check_orthogonal_basis(const ExponentialSystem& system, double tolerance) {
  const auto& domain = system.domain();
  const auto& e = system.vectors();
  if (e.rows() != domain.count()) return false;
  const double w = domain.parent().weight();
  const double measure = to_double(domain.measure());
  for (std::size_t a = 0; a < e.rows(); ++a) {
    for (std::size_t b = a; b < e.rows(); ++b) {
      Complex gram = 0.0;
      for (std::size_t c = 0; c < e.cols(); ++c) gram += e(a, c) * std::conj(e(b, c));
      gram *= w;
      const double expected = a == b ? measure : 0.0;
      if (std::abs(gram - expected) > tolerance) return false;
    }
  }
  return true;
}

ModulationWindow ModulationWindow::from_values(std::vector<Complex> values) {
  if (values.empty()) throw PreconditionError("modulation window is empty");
  double lower = std::norm(values.front());
  double upper = lower;
  for (const auto& v : values) {
    lower = std::min(lower, std::norm(v));
    upper = std::max(upper, std::norm(v));
  }
  if (!(lower > 0.0)) throw PreconditionError("modulation window must satisfy min |psi|^2 > 0");
  return ModulationWindow(std::move(values), lower, upper);
}

ModulationWindow ModulationWindow::ramp(std::size_t count) {
  std::vector<Complex> values;
  values.reserve(count);
  for (std::size_t r = 0; r < count; ++r) {
    values.emplace_back(1.0 + static_cast<double>(r) / static_cast<double>(count));
  }
  return from_values(std::move(values));
}

ModulatedFrameReport modulated_frame_report(const ExponentialSystem& system,
                                            const ModulationWindow& window,
                                            const FrameTolerances& tolerances) {
  const auto& psi = window.values();
  const std::size_t n = system.domain().count();
  if (psi.size() != n) throw StructuralError("window length does not match the domain");

  const auto base = frame_operator(system);
  ComplexMatrix modulated(n, n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) modulated(g, h) = psi[g] * base(g, h) * std::conj(psi[h]);
  }

  ModulatedFrameReport report;
  report.frame = frame_bounds(modulated, tolerances);
  const double q = to_double(system.lattice_size());
  report.window_lower = window.lower() * q;
  report.window_upper = window.upper() * q;
  const double slack = tolerances.tight * std::max(1.0, report.window_upper);
  report.bounds_respected = report.frame.lower_bound >= report.window_lower - slack &&
                            report.frame.upper_bound <= report.window_upper + slack;

  double base_deviation = 0.0;
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      base_deviation = std::max(base_deviation, std::abs(base(g, h) - (g == h ? q : 0.0)));
    }
  }
  if (base_deviation < tolerances.tight) {
    double deviation = 0.0;
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t h = 0; h < n; ++h) {
        const double expected = g == h ? q * std::norm(psi[g]) : 0.0;
        deviation = std::max(deviation, std::abs(modulated(g, h) - expected));
      }
    }
    report.diagonal_deviation = deviation;
  }
  return report;
}

ObstructionWitness obstruction_witness(const LatticeSubgroup& lattice, const MeasuredSet& omega) {
  return obstruction_witness(lattice, omega, cross_section(lattice));
}

ObstructionWitness obstruction_witness(const LatticeSubgroup& lattice, const MeasuredSet& omega,
                                       const CrossSection& section) {
  const auto& group = lattice.parent();
  if (omega.empty() || check_subtiling(lattice, omega).is_subtiling) {
    throw PreconditionError("obstruction witness requires a set that does not sub-tile");
  }

  std::vector<unsigned char> in_section(group.order(), 0);
  for (auto q : section.indices) in_section[q] = 1;

  for (auto lambda1 : lattice.element_indices()) {
    for (auto lambda2 : lattice.element_indices()) {
      if (lambda2 == 0) continue;
      std::vector<std::size_t> omega1;
      for (auto g : omega.indices()) {
        // g in Q + lambda1, and g - lambda2 in Omega
        if (in_section[group.sub_index(g, lambda1)] &&
            omega.contains_index(group.sub_index(g, lambda2))) {
          omega1.push_back(g);
        }
      }
      if (omega1.empty()) continue;

      ObstructionWitness witness;
      witness.lambda1 = group.element_at(lambda1);
      witness.lambda2 = group.element_at(lambda2);
      witness.omega1 = omega1;
      for (auto g : omega1) witness.omega2.push_back(group.sub_index(g, lambda2));
      std::sort(witness.omega2.begin(), witness.omega2.end());
      witness.values.assign(omega.count(), 0.0);
      for (auto g : witness.omega1) witness.values[omega.rank_of(g)] += 1.0;
      for (auto g : witness.omega2) witness.values[omega.rank_of(g)] -= 1.0;

      const auto perp = annihilator(lattice);
      for (auto mu : perp.character_indices()) {
        Complex pairing = 0.0;
        for (std::size_t r = 0; r < omega.count(); ++r) {
          pairing += witness.values[r] * std::conj(group.pairing_index(mu, omega.indices()[r]));
        }
        witness.max_pairing = std::max(witness.max_pairing, std::abs(group.weight() * pairing));
      }
      if (witness.max_pairing > 1e-12) {
        throw std::logic_error("obstruction witness is not orthogonal to the exponentials");
      }
      return witness;
    }
  }
  throw std::logic_error("no obstruction triple found for a set that does not sub-tile");
}

}  // namespace subtile
