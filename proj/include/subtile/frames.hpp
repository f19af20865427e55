// Exponential systems {e_mu : mu in L-perp} restricted to a set Omega:
// frame operator, sharp frame bounds, the orthogonal-basis test, frames of
// modulates, and the nonzero function orthogonal to every exponential that
// exists whenever Omega fails to sub-tile.

#pragma once

#include "subtile/hermitian.hpp"
#include "subtile/lattice.hpp"
#include "subtile/measured_set.hpp"

#include <optional>
#include <vector>

namespace subtile {

class ExponentialSystem {
 public:
  ExponentialSystem(const LatticeSubgroup& lattice, MeasuredSet domain);

  const MeasuredSet& domain() const { return domain_; }
  const DualLattice& indices() const { return indices_; }
  /// Row r holds e_mu restricted to Omega for the r-th annihilator character.
  const ComplexMatrix& vectors() const { return vectors_; }
  /// |Q_L|, the tight frame constant expected when Omega sub-tiles.
  const Rational& lattice_size() const { return lattice_size_; }

 private:
  MeasuredSet domain_;
  DualLattice indices_;
  ComplexMatrix vectors_;
  Rational lattice_size_;
};

/// S(g, h) = w * sum_mu e_mu(g) conj e_mu(h) on Omega x Omega.
/// Throws PreconditionError on an empty domain.
ComplexMatrix frame_operator(const ExponentialSystem& system);

struct FrameTolerances {
  double frame = 1e-9;  // is_frame iff lower bound exceeds this
  double tight = 1e-9;  // is_tight iff upper - lower is below this
};

struct FrameReport {
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  bool is_frame = false;
  bool is_tight = false;
  std::optional<double> tight_constant;  // set iff is_tight
  std::vector<double> spectrum;          // ascending
  friend bool operator==(const FrameReport&, const FrameReport&) = default;
};

FrameReport frame_bounds(const ComplexMatrix& s, const FrameTolerances& tolerances = {});

/// Gram matrix of the system in L2(Omega) is |Omega| I and there are as many
/// exponentials as points.
bool check_orthogonal_basis(const ExponentialSystem& system, double tolerance = 1e-9);

/// A window psi on Omega (values in domain order) with 0 < A <= |psi|^2 <= B.
class ModulationWindow {
 public:
  /// Throws PreconditionError when min |psi|^2 is not positive.
  static ModulationWindow from_values(std::vector<Complex> values);
  /// psi(g) = 1 + rank(g) / #Omega, rank being the position in Omega.
  static ModulationWindow ramp(std::size_t count);

  const std::vector<Complex>& values() const { return values_; }
  double lower() const { return lower_; }
  double upper() const { return upper_; }

 private:
  ModulationWindow(std::vector<Complex> values, double lower, double upper)
      : values_(std::move(values)), lower_(lower), upper_(upper) {}
  std::vector<Complex> values_;
  double lower_;
  double upper_;
};

struct ModulatedFrameReport {
  FrameReport frame;
  double window_lower = 0.0;  // A |Q_L|
  double window_upper = 0.0;  // B |Q_L|
  bool bounds_respected = false;
  /// max |S_psi - |Q_L| diag(|psi|^2)|, present when the exponential system is tight.
  std::optional<double> diagonal_deviation;
  /// Frame whose sharp bounds sit inside [A |Q_L|, B |Q_L|].
  bool holds() const { return frame.is_frame && bounds_respected; }
  friend bool operator==(const ModulatedFrameReport&, const ModulatedFrameReport&) = default;
};

ModulatedFrameReport modulated_frame_report(const ExponentialSystem& system,
                                            const ModulationWindow& window,
                                            const FrameTolerances& tolerances = {});

struct ObstructionWitness {
  GroupElement lambda1;
  GroupElement lambda2;
  std::vector<std::size_t> omega1;  // (Q_L + lambda1) ∩ Omega ∩ (Omega + lambda2)
  std::vector<std::size_t> omega2;  // omega1 - lambda2
  std::vector<Complex> values;      // 1_{omega1} - 1_{omega2}, in domain order
  double max_pairing = 0.0;         // max |<f, e_mu>| over the annihilator
  friend bool operator==(const ObstructionWitness&, const ObstructionWitness&) = default;
};

/// Throws PreconditionError when Omega sub-tiles; std::logic_error if the
/// constructed function fails the 1e-12 orthogonality check.
ObstructionWitness obstruction_witness(const LatticeSubgroup& lattice, const MeasuredSet& omega);
ObstructionWitness obstruction_witness(const LatticeSubgroup& lattice, const MeasuredSet& omega,
                                       const CrossSection& section);

}  // namespace subtile
