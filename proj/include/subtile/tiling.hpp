// Sub-tiling and tiling predicates for a set and a lattice, the spectral
// (periodized power spectrum) test, orthonormality of normalized translates,
// and exhaustive enumeration of sub-tiling sets.

#pragma once

#include "subtile/fourier.hpp"
#include "subtile/lattice.hpp"
#include "subtile/measured_set.hpp"

#include <cstdint>
#include <vector>

namespace subtile {

/// A nonzero lattice vector whose translate of Omega meets Omega.
struct ViolatingPair {
  GroupElement lambda;
  Rational overlap;  // |Omega ∩ (Omega + lambda)|
  friend bool operator==(const ViolatingPair&, const ViolatingPair&) = default;
};

struct TilingVerdict {
  bool is_subtiling = false;
  bool is_tiling = false;
  std::vector<ViolatingPair> violating_pairs;
  friend bool operator==(const TilingVerdict&, const TilingVerdict&) = default;
};

/// |Omega ∩ (Omega + lambda)|, exactly.
Rational overlap_measure(const MeasuredSet& omega, std::size_t lambda);

/// Throws PreconditionError on an empty set.
TilingVerdict check_subtiling(const LatticeSubgroup& lattice, const MeasuredSet& omega);

struct Condition2Result {
  bool is_constant = false;
  Rational target;  // |Q_L| |Omega|
  double max_deviation = 0.0;
  friend bool operator==(const Condition2Result&, const Condition2Result&) = default;
};

Condition2Result check_condition2(const LatticeSubgroup& lattice, const MeasuredSet& omega,
                                  double tolerance = 1e-9);

/// Evidence for orthonormality of {|Omega|^{-1/2} 1_Omega(. - lambda)}, by two routes.
struct TranslateOrthonormality {
  bool by_gram = false;      // exact overlaps
  bool by_spectrum = false;  // periodized |F(phi)|^2 against |Q_L|
  std::vector<Rational> gram_row;  // <phi, T_lambda phi> per lattice element, in element order
  double spectral_deviation = 0.0;
  friend bool operator==(const TranslateOrthonormality&, const TranslateOrthonormality&) = default;
};

TranslateOrthonormality translate_orthonormality_evidence(const LatticeSubgroup& lattice,
                                                          const MeasuredSet& omega,
                                                          double tolerance = 1e-9);

/// Throws std::logic_error when the two routes disagree.
bool check_translate_orthonormality(const LatticeSubgroup& lattice, const MeasuredSet& omega,
                                    double tolerance = 1e-9);

/// All k-point sets meeting every coset at most once, lexicographically sorted.
/// Throws PreconditionError unless 0 <= k <= [G:L].
std::vector<MeasuredSet> enumerate_subtilings(const LatticeSubgroup& lattice, std::size_t k);

/// C(index, k) * size^k
std::uint64_t subtiling_count(std::size_t index, std::size_t size, std::size_t k);

/// Adds the lexicographically first point of every unvisited coset.
/// Throws PreconditionError if Omega is not sub-tiling.
MeasuredSet extend_to_tiling(const LatticeSubgroup& lattice, const MeasuredSet& omega);

}  // namespace subtile
