// Subgroups of a finite abelian group viewed as lattices: closure from
// generators, annihilators, cross sections, lattice sizes and Weil's formula.
//
// Every subgroup of a finite group is discrete and co-compact, so "lattice"
// and "subgroup" coincide here. The quotient G/L is never built as a type;
// it is carried by a cross section plus the coset labelling below.

#pragma once

#include "subtile/group.hpp"

#include <random>
#include <span>
#include <vector>

namespace subtile {

class LatticeSubgroup {
 public:
  const FiniteAbelianGroup& parent() const { return parent_; }
  const std::vector<GroupElement>& generators() const { return generators_; }

  /// Flat indices of the elements, sorted ascending (lexicographic order).
  const std::vector<std::size_t>& element_indices() const { return elements_; }
  std::vector<GroupElement> elements() const;

  std::size_t size() const { return elements_.size(); }
  /// [G : L]
  std::size_t index() const { return parent_.order() / elements_.size(); }
  bool contains_index(std::size_t g) const { return member_[g] != 0; }
  bool contains(const GroupElement& g) const { return contains_index(parent_.index_of(g)); }

  /// Coset label of g. Labels are numbered in order of first appearance when
  /// G is scanned lexicographically.
  std::size_t coset_of(std::size_t g) const { return coset_[g]; }
  /// First element of each coset in lexicographic order; position = coset label.
  const std::vector<std::size_t>& coset_leaders() const { return leaders_; }

  /// Same coordinates and same element set.
  friend bool operator==(const LatticeSubgroup& a, const LatticeSubgroup& b) {
    return a.parent_.same_coordinates(b.parent_) && a.elements_ == b.elements_;
  }

 private:
  LatticeSubgroup(FiniteAbelianGroup parent, std::vector<GroupElement> generators,
                  std::vector<std::size_t> elements);

  friend LatticeSubgroup subgroup_from_generators(const FiniteAbelianGroup&,
                                                  std::span<const GroupElement>);
  friend LatticeSubgroup subgroup_from_index_generators(const FiniteAbelianGroup&,
                                                        std::span<const std::size_t>);

  FiniteAbelianGroup parent_;
  std::vector<GroupElement> generators_;
  std::vector<std::size_t> elements_;
  std::vector<unsigned char> member_;
  std::vector<std::size_t> coset_;
  std::vector<std::size_t> leaders_;
};

/// Closure of the generators under addition. Empty input gives {0}.
LatticeSubgroup subgroup_from_generators(const FiniteAbelianGroup& group,
                                         std::span<const GroupElement> generators);
LatticeSubgroup subgroup_from_index_generators(const FiniteAbelianGroup& group,
                                               std::span<const std::size_t> generators);

/// Every subgroup of G, sorted by (size, elements). Intended for small groups.
std::vector<LatticeSubgroup> all_subgroups(const FiniteAbelianGroup& group);

/// The annihilator of a lattice: all characters trivial on it. Stored as a
/// subgroup of the dual group (same coordinates, dual Haar weight).
class DualLattice {
 public:
  explicit DualLattice(LatticeSubgroup subgroup) : subgroup_(std::move(subgroup)) {}

  const LatticeSubgroup& as_subgroup() const { return subgroup_; }
  const std::vector<std::size_t>& character_indices() const { return subgroup_.element_indices(); }
  std::vector<Character> characters() const;
  std::size_t size() const { return subgroup_.size(); }
  bool contains_index(std::size_t chi) const { return subgroup_.contains_index(chi); }

  friend bool operator==(const DualLattice&, const DualLattice&) = default;

 private:
  LatticeSubgroup subgroup_;
};

DualLattice annihilator(const LatticeSubgroup& lattice);

/// One representative per coset, plus the Haar measure of that set.
struct CrossSection {
  std::vector<std::size_t> indices;
  std::vector<GroupElement> representatives;
  Rational size;
};

/// Greedy lexicographic scan; keeps g iff its coset has no representative yet.
CrossSection cross_section(const LatticeSubgroup& lattice);
/// A uniformly random representative per coset.
CrossSection randomized_cross_section(const LatticeSubgroup& lattice, std::mt19937_64& rng);

struct LatticeSizes {
  Rational primal;  // |Q_L| = [G:L] w
  Rational dual;    // |Q_{L-perp}| = |L| w_dual
};

LatticeSizes lattice_sizes(const LatticeSubgroup& lattice);

struct WeilSides {
  Complex lhs;  // integral of f over G
  Complex rhs;  // |Q_L| times the normalized quotient integral of the periodization
};

WeilSides weil_check(const LatticeSubgroup& lattice, const FunctionTable& f);
WeilSides weil_check(const LatticeSubgroup& lattice, const FunctionTable& f,
                     const CrossSection& section);

}  // namespace subtile
