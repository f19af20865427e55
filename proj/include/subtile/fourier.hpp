// Group Fourier transform, the bracket map of the translation representation,
// and the periodization / periodized power spectrum pair with their
// Fourier-coefficient identities.
//
// Conventions:
//   F(f)(chi) = w * sum_g f(g) conj<chi, g>
//   [phi, psi](chi) = |Q_{L-perp}| * sum_{mu in L-perp} F(phi)(chi+mu) conj F(psi)(chi+mu)
// Quotients carry the normalized counting measure over their cross section.

#pragma once

#include "subtile/group.hpp"
#include "subtile/lattice.hpp"
#include "subtile/measured_set.hpp"

#include <vector>

namespace subtile {

/// Values of a transform on every character, indexed like the group.
struct SpectrumTable {
  FunctionTable values;
};

enum class TransformMethod {
  direct,     // O(|G|^2) summation
  separable,  // one axis at a time; same result, O(|G| * sum N_j)
};

SpectrumTable fourier_transform(const FiniteAbelianGroup& group, const FunctionTable& f,
                                TransformMethod method = TransformMethod::direct);

/// Inverse of fourier_transform, using the dual weight.
FunctionTable inverse_fourier_transform(const FiniteAbelianGroup& group,
                                        const SpectrumTable& spectrum);

/// The bracket sampled at each representative of a cross section of
/// (dual group) / (annihilator). There are |L| base points.
struct BracketFunction {
  CrossSection base_points;
  std::vector<Complex> values;
};

BracketFunction bracket(const LatticeSubgroup& lattice, const FunctionTable& phi,
                        const FunctionTable& psi);

/// Integral of [phi, psi] against the character induced by lambda on the
/// dual quotient. Reproduces <phi, T_lambda psi> in L2(G).
Complex bracket_integral(const LatticeSubgroup& lattice, const BracketFunction& bracket,
                         std::size_t lambda);

/// <phi, T_lambda psi> in L2(G), with T_lambda psi(g) = psi(g - lambda).
Complex translate_inner_product(const FiniteAbelianGroup& group, const FunctionTable& phi,
                                const FunctionTable& psi, std::size_t lambda);

/// H(chi) = sum over the annihilator of |F(1_Omega)(chi + mu)|^2, for every chi.
FunctionTable periodized_power_spectrum(const LatticeSubgroup& lattice, const MeasuredSet& omega);

/// f(q) = #{lambda : q + lambda in Omega} for each q of the lexicographic
/// cross section (in cross-section order).
std::vector<std::int64_t> periodization(const LatticeSubgroup& lattice, const MeasuredSet& omega);
std::vector<std::int64_t> periodization(const LatticeSubgroup& lattice, const MeasuredSet& omega,
                                        const CrossSection& section);

struct CoefficientIdentityReport {
  // Per lattice element, in element order: coefficient of H vs overlap / |Q_{L-perp}|.
  std::vector<Complex> power_spectrum_coefficients;
  std::vector<Complex> overlap_side;
  // Per annihilator character, in character order: coefficient of f vs F(1_Omega) / |Q_L|.
  std::vector<Complex> periodization_coefficients;
  std::vector<Complex> transform_side;
  double max_discrepancy = 0.0;
  double scale = 0.0;  // largest |value| on either side of either identity
};

CoefficientIdentityReport coefficient_identities(const LatticeSubgroup& lattice,
                                                 const MeasuredSet& omega);
CoefficientIdentityReport coefficient_identities(const LatticeSubgroup& lattice,
                                                 const MeasuredSet& omega,
                                                 const CrossSection& section,
                                                 const CrossSection& dual_section);

}  // namespace subtile
