#include "subtile/fourier.hpp"

#include <algorithm>
#include <cmath>

namespace subtile {

namespace {

void require_table(const FiniteAbelianGroup& group, const FunctionTable& f) {
  if (f.size() != group.order()) throw StructuralError("function table size does not match |G|");
}

FunctionTable transform_direct(const FiniteAbelianGroup& group, const FunctionTable& f) {
  const std::size_t n = group.order();
  FunctionTable out(n);
  for (std::size_t chi = 0; chi < n; ++chi) {
    Complex sum = 0.0;
    for (std::size_t g = 0; g < n; ++g) {
      if (f[g] == Complex(0.0)) continue;
      sum += f[g] * std::conj(group.pairing_index(chi, g));
    }
    out[chi] = group.weight() * sum;
  }
  return out;
}

FunctionTable transform_separable(const FiniteAbelianGroup& group, const FunctionTable& f) {
  FunctionTable data = f;
  const auto& orders = group.cyclic_orders();
  const std::size_t n = group.order();
  std::size_t stride = n;
  std::vector<Complex> line;
  for (std::size_t axis = 0; axis < orders.size(); ++axis) {
    const auto len = static_cast<std::size_t>(orders[axis]);
    stride /= len;
    const std::int64_t scale = group.exponent_modulus() / orders[axis];
    line.resize(len);
    for (std::size_t base = 0; base < n; ++base) {
      if (group.coord(base, axis) != 0) continue;
      for (std::size_t x = 0; x < len; ++x) line[x] = data[base + x * stride];
      for (std::size_t c = 0; c < len; ++c) {
        Complex sum = 0.0;
        for (std::size_t x = 0; x < len; ++x) {
          const auto e = static_cast<std::int64_t>((c * x) % len) * scale;
          sum += line[x] * std::conj(group.root_of_unity(e));
        }
        data[base + c * stride] = sum;
      }
    }
  }
  for (auto& v : data) v *= group.weight();
  return data;
}

}  // namespace

SpectrumTable fourier_transform(const FiniteAbelianGroup& group, const FunctionTable& f,
                                TransformMethod method) {
  require_table(group, f);
  if (method == TransformMethod::separable) return {transform_separable(group, f)};
  return {transform_direct(group, f)};
}

FunctionTable inverse_fourier_transform(const FiniteAbelianGroup& group,
                                        const SpectrumTable& spectrum) {
  require_table(group, spectrum.values);
  const std::size_t n = group.order();
  FunctionTable out(n);
  for (std::size_t g = 0; g < n; ++g) {
    Complex sum = 0.0;
    for (std::size_t chi = 0; chi < n; ++chi) sum += spectrum.values[chi] * group.pairing_index(chi, g);
    out[g] = group.dual_weight() * sum;
  }
  return out;
}

BracketFunction bracket(const LatticeSubgroup& lattice, const FunctionTable& phi,
                        const FunctionTable& psi) {
  const auto& group = lattice.parent();
  const auto f_phi = fourier_transform(group, phi).values;
  const auto f_psi = fourier_transform(group, psi).values;
  const auto dual = annihilator(lattice);

  BracketFunction out;
  out.base_points = cross_section(dual.as_subgroup());
  const double scale = to_double(out.base_points.size);
  out.values.reserve(out.base_points.indices.size());
  for (auto q : out.base_points.indices) {
    Complex sum = 0.0;
    for (auto mu : dual.character_indices()) {
      const auto chi = group.add_index(q, mu);
      sum += f_phi[chi] * std::conj(f_psi[chi]);
    }
    out.values.push_back(scale * sum);
  }
  return out;
}

Complex bracket_integral(const LatticeSubgroup& lattice, const BracketFunction& bracket,
                         std::size_t lambda) {
  const auto& group = lattice.parent();
  Complex sum = 0.0;
  for (std::size_t i = 0; i < bracket.values.size(); ++i) {
    sum += bracket.values[i] * group.pairing_index(bracket.base_points.indices[i], lambda);
  }
  return sum / static_cast<double>(bracket.values.size());
}

Complex translate_inner_product(const FiniteAbelianGroup& group, const FunctionTable& phi,
                                const FunctionTable& psi, std::size_t lambda) {
  require_table(group, phi);
  require_table(group, psi);
  Complex sum = 0.0;
  for (std::size_t g = 0; g < group.order(); ++g) {
    sum += phi[g] * std::conj(psi[group.sub_index(g, lambda)]);
  }
  return group.weight() * sum;
}

FunctionTable periodized_power_spectrum(const LatticeSubgroup& lattice, const MeasuredSet& omega) {
  const auto& group = lattice.parent();
  const auto spectrum = fourier_transform(group, omega.indicator()).values;
  const auto dual = annihilator(lattice);
  FunctionTable h(group.order());
  for (std::size_t chi = 0; chi < group.order(); ++chi) {
    double sum = 0.0;
    for (auto mu : dual.character_indices()) sum += std::norm(spectrum[group.add_index(chi, mu)]);
    h[chi] = sum;
  }
  return h;
}

std::vector<std::int64_t> periodization(const LatticeSubgroup& lattice, const MeasuredSet& omega) {
  return periodization(lattice, omega, cross_section(lattice));
}

std::vector<std::int64_t> periodization(const LatticeSubgroup& lattice, const MeasuredSet& omega,
                                        const CrossSection& section) {
  const auto& group = lattice.parent();
  std::vector<std::int64_t> counts;
  counts.reserve(section.indices.size());
  for (auto q : section.indices) {
    std::int64_t c = 0;
    for (auto lambda : lattice.element_indices()) c += omega.contains_index(group.add_index(q, lambda));
    counts.push_back(c);
  }
  return counts;
}

CoefficientIdentityReport coefficient_identities(const LatticeSubgroup& lattice,
                                                 const MeasuredSet& omega) {
  return coefficient_identities(lattice, omega, cross_section(lattice),
                                cross_section(annihilator(lattice).as_subgroup()));
}

CoefficientIdentityReport coefficient_identities(const LatticeSubgroup& lattice,
                                                 const MeasuredSet& omega,
                                                 const CrossSection& section,
                                                 const CrossSection& dual_section) {
  const auto& group = lattice.parent();
  const auto sizes = lattice_sizes(lattice);
  const auto dual = annihilator(lattice);
  const auto h = periodized_power_spectrum(lattice, omega);
  const auto transform = fourier_transform(group, omega.indicator()).values;
  const auto f = periodization(lattice, omega, section);

  CoefficientIdentityReport report;
  const double dual_size = to_double(sizes.dual);
  for (auto lambda : lattice.element_indices()) {
    Complex coeff = 0.0;
    for (auto q : dual_section.indices) coeff += h[q] * std::conj(group.pairing_index(q, lambda));
    coeff /= static_cast<double>(dual_section.indices.size());

    std::int64_t overlap = 0;
    for (auto g : omega.indices()) overlap += omega.contains_index(group.sub_index(g, lambda));
    const double overlap_measure = static_cast<double>(overlap) * group.weight();

    report.power_spectrum_coefficients.push_back(coeff);
    report.overlap_side.push_back(overlap_measure / dual_size);
  }

  const double primal_size = to_double(sizes.primal);
  for (auto mu : dual.character_indices()) {
    Complex coeff = 0.0;
    for (std::size_t i = 0; i < section.indices.size(); ++i) {
      coeff += static_cast<double>(f[i]) * std::conj(group.pairing_index(mu, section.indices[i]));
    }
    coeff /= static_cast<double>(section.indices.size());
    report.periodization_coefficients.push_back(coeff);
    report.transform_side.push_back(transform[mu] / primal_size);
  }

  for (const auto* side : {&report.power_spectrum_coefficients, &report.overlap_side,
                           &report.periodization_coefficients, &report.transform_side}) {
    for (const auto& v : *side) report.scale = std::max(report.scale, std::abs(v));
  }
  for (std::size_t i = 0; i < report.overlap_side.size(); ++i) {
    report.max_discrepancy = std::max(
        report.max_discrepancy, std::abs(report.power_spectrum_coefficients[i] - report.overlap_side[i]));
  }
  for (std::size_t i = 0; i < report.transform_side.size(); ++i) {
    report.max_discrepancy = std::max(
        report.max_discrepancy, std::abs(report.periodization_coefficients[i] - report.transform_side[i]));
  }
  return report;
}

}  // namespace subtile
