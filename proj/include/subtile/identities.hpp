// Randomized checks of the supporting identities on a fixed lattice:
// Weil's formula, Plancherel, the bracket reproducing property, the
// bracket characterization of orthonormal translates, the two Fourier
// coefficient identities for H and the periodization, and |Q_L| |Q_{L-perp}| = 1.

#pragma once

#include "subtile/lattice.hpp"
#include "subtile/measured_set.hpp"

#include <cstdint>
#include <random>

namespace subtile {

/// Entries uniform in [-1, 1] + i[-1, 1].
FunctionTable random_function(std::size_t size, std::mt19937_64& rng);
/// Nonempty, each point kept with probability 1/2 (redrawn until nonempty).
MeasuredSet random_subset(const FiniteAbelianGroup& group, std::mt19937_64& rng);
/// Nonempty set meeting each coset at most once.
MeasuredSet random_subtiling_set(const LatticeSubgroup& lattice, std::mt19937_64& rng);

struct IdentitySuiteOptions {
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  double tolerance = 1e-10;
};

struct IdentitySuiteReport {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  double weil = 0.0;          // max |lhs - rhs|
  double plancherel = 0.0;    // max |<Ff, Fh> - <f, h>|
  double bracket = 0.0;       // max |<phi, T_lambda psi> - integral of bracket|
  double coefficients = 0.0;  // max discrepancy in both coefficient identities
  std::size_t orthonormality_cases = 0;
  std::size_t orthonormal_cases = 0;  // how many were orthonormal
  std::size_t orthonormality_disagreements = 0;
  Rational size_product{0};

  bool holds() const {
    return weil < tolerance && plancherel < tolerance && bracket < tolerance &&
           coefficients < tolerance && orthonormality_disagreements == 0 && size_product == Rational(1);
  }
};

IdentitySuiteReport run_identity_suite(const LatticeSubgroup& lattice,
                                       const IdentitySuiteOptions& options = {});

/// Both routes for {T_lambda phi} orthonormal: Gram entries, and [phi, phi] == 1.
struct OrthonormalTranslates {
  bool by_inner_products = false;
  bool by_bracket = false;
};

OrthonormalTranslates orthonormal_translates(const LatticeSubgroup& lattice, const FunctionTable& phi,
                                             double tolerance);

}  // namespace subtile
