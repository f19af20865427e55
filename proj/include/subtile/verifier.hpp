// End-to-end checks on a (group, lattice, set) triple: every condition of the
// sub-tiling / tight-frame equivalence evaluated independently, the
// corollaries, and the supporting identities, gathered in one report.

#pragma once

#include "subtile/config.hpp"
#include "subtile/frames.hpp"
#include "subtile/identities.hpp"
#include "subtile/tiling.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace subtile {

/// One sample of each supporting identity, attached to a single verification.
struct IdentityChecks {
  double weil = 0.0;
  double plancherel = 0.0;
  double bracket = 0.0;
  double coefficients = 0.0;
  double coefficient_scale = 0.0;  // the coefficient check is relative to max(1, this)
  bool orthonormality_routes_agree = false;
  Rational primal_size{0};
  Rational dual_size{0};
  double tolerance = 1e-10;

  bool hold() const {
    return weil < tolerance && plancherel < tolerance && bracket < tolerance &&
           coefficients < tolerance * std::max(1.0, coefficient_scale) && orthonormality_routes_agree &&
           primal_size * dual_size == Rational(1);
  }
  friend bool operator==(const IdentityChecks&, const IdentityChecks&) = default;
};

struct EquivalenceReport {
  // Inputs, echoed.
  std::vector<std::int64_t> group;
  Rational weight_g{1};
  std::vector<std::size_t> lattice;
  std::vector<std::size_t> annihilator;
  std::vector<std::size_t> cross_section;
  std::vector<std::size_t> omega;
  std::vector<Complex> psi;

  // 1) sub-tiling, 2) constant periodized power spectrum, 3) orthonormal
  // translates, 4) exponential frame, 5) frame of modulates.
  bool condition1 = false;
  bool condition2 = false;
  bool condition3 = false;
  bool condition4 = false;
  bool condition5 = false;
  TilingVerdict tiling;
  Condition2Result condition2_evidence;
  TranslateOrthonormality condition3_evidence;
  FrameReport condition4_evidence;
  ModulatedFrameReport condition5_evidence;
  FunctionTable power_spectrum;  // H on every character

  bool orthogonal_basis = false;
  std::optional<ObstructionWitness> witness;

  bool consistent = false;  // the five conditions agree
  double tight_constant_observed = 0.0;
  bool tight_constant_matches = false;
  IdentityChecks identities;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;

  /// Consistent, tight constant as predicted, identities within tolerance.
  bool ok() const { return consistent && tight_constant_matches && identities.hold(); }
  friend bool operator==(const EquivalenceReport&, const EquivalenceReport&) = default;
};

struct VerifyOptions {
  std::optional<std::vector<Complex>> psi;  // defaults to ModulationWindow::ramp
  double tolerance = 1e-9;
  std::uint64_t seed = 1;
};

EquivalenceReport verify_triple(const LatticeSubgroup& lattice, const MeasuredSet& omega,
                                const VerifyOptions& options = {});
/// Requires config.omega. Throws ConfigError when it is missing or empty.
EquivalenceReport verify_triple(const Config& config);

/// Raised by require_consistent; carries the full report as JSON text.
class InconsistencyError : public std::runtime_error {
 public:
  InconsistencyError(const std::string& what, std::string evidence)
      : std::runtime_error(what), evidence_(std::move(evidence)) {}
  const std::string& evidence() const { return evidence_; }

 private:
  std::string evidence_;
};

void require_consistent(const EquivalenceReport& report);

struct FugledeOptions {
  std::size_t cap = 4096;  // exhaustive when 2^|G| <= cap, sampled otherwise
  std::uint64_t seed = 1;
};

struct FugledeRow {
  std::vector<std::size_t> lattice;
  std::size_t cases = 0;
  std::size_t tilings = 0;
  std::size_t orthogonal_bases = 0;
  std::size_t disagreements = 0;
  std::vector<std::vector<std::size_t>> examples;  // first few disagreeing sets
  friend bool operator==(const FugledeRow&, const FugledeRow&) = default;
};

struct FugledeReport {
  std::vector<std::int64_t> group;
  bool exhaustive = true;
  std::size_t subsets_per_lattice = 0;
  std::size_t total_cases = 0;
  std::size_t total_disagreements = 0;
  std::uint64_t seed = 0;
  std::vector<FugledeRow> rows;
  friend bool operator==(const FugledeReport&, const FugledeReport&) = default;
};

/// Cross-tabulates tiling against orthogonal-basis over all subgroups and all
/// (or sampled) subsets, the empty set included.
FugledeReport fuglede_suite(const FiniteAbelianGroup& group, const FugledeOptions& options = {});

}  // namespace subtile
