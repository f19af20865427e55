// Finite abelian groups Z_{N1} x ... x Z_{Nk}, their characters, and the
// Haar weights that make the group Fourier transform an isometry.
//
// Elements and characters share one coordinate space. Every element also has
// a flat index: the position of its coordinate tuple in lexicographic order
// (first coordinate most significant). Function tables are indexed the same
// way.

#pragma once

#include <boost/rational.hpp>

#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace subtile {

using Complex = std::complex<double>;
using Rational = boost::rational<std::int64_t>;

/// Values of a function on G (or on the dual group), in flat-index order.
using FunctionTable = std::vector<Complex>;

/// Objects from different groups were combined, or coordinates are malformed.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An operation was called outside its mathematical hypotheses.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed text or q = 0.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& value);
double to_double(const Rational& value);

struct GroupElement {
  std::vector<std::int64_t> coords;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

struct Character {
  std::vector<std::int64_t> coords;
  friend auto operator<=>(const Character&, const Character&) = default;
};

class FiniteAbelianGroup {
 public:
  /// Weight on the dual side is chosen as 1 / (weight_g * |G|).
  explicit FiniteAbelianGroup(std::vector<std::int64_t> cyclic_orders,
                              Rational weight_g = Rational(1));

  /// Both weights given explicitly; requires weight_g * weight_dual * |G| == 1.
  FiniteAbelianGroup(std::vector<std::int64_t> cyclic_orders, Rational weight_g,
                     Rational weight_dual);

  const std::vector<std::int64_t>& cyclic_orders() const { return data_->orders; }
  std::size_t rank() const { return data_->orders.size(); }
  std::size_t order() const { return data_->order; }
  const Rational& weight_g() const { return data_->weight_g; }
  const Rational& weight_dual() const { return data_->weight_dual; }
  double weight() const { return data_->weight_g_d; }
  double dual_weight() const { return data_->weight_dual_d; }

  /// The character group, in the same coordinates, with the two weights swapped.
  FiniteAbelianGroup dual() const;

  /// Reduces arbitrary integer coordinates modulo the cyclic orders.
  GroupElement element(std::span<const std::int64_t> coords) const;
  Character character(std::span<const std::int64_t> coords) const;
  GroupElement zero() const;

  std::size_t index_of(const GroupElement& g) const;
  std::size_t index_of(const Character& chi) const;
  GroupElement element_at(std::size_t index) const;
  Character character_at(std::size_t index) const;
  std::int64_t coord(std::size_t index, std::size_t axis) const {
    return static_cast<std::int64_t>(index / data_->strides[axis]) % data_->orders[axis];
  }

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  Character add(const Character& a, const Character& b) const;

  Complex pairing(const Character& chi, const GroupElement& g) const;
  /// Exact integer test for <chi, g> == 1.
  bool pairing_is_one(const Character& chi, const GroupElement& g) const;

  // Flat-index kernels used by the algorithms; no validation.
  std::size_t add_index(std::size_t a, std::size_t b) const;
  std::size_t sub_index(std::size_t a, std::size_t b) const;
  std::size_t neg_index(std::size_t a) const;
  /// e with <chi, g> = exp(2 pi i e / L), L = lcm of the cyclic orders; e in [0, L).
  std::int64_t pairing_exponent(std::size_t chi, std::size_t g) const;
  Complex pairing_index(std::size_t chi, std::size_t g) const {
    return data_->phases[static_cast<std::size_t>(pairing_exponent(chi, g))];
  }
  std::int64_t exponent_modulus() const { return data_->lcm; }
  /// exp(2 pi i e / L) for any integer e.
  Complex root_of_unity(std::int64_t exponent) const;

  /// <f, h> in L2(G, dg): w * sum f conj(h).
  Complex inner_product(const FunctionTable& f, const FunctionTable& h) const;
  /// <F, H> in L2(dual, dchi), using the dual weight.
  Complex dual_inner_product(const FunctionTable& f, const FunctionTable& h) const;

  /// Same cyclic orders and same weights.
  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b);
  /// Same cyclic orders; weights may differ.
  bool same_coordinates(const FiniteAbelianGroup& other) const {
    return data_->orders == other.data_->orders;
  }

 private:
  struct Data {
    std::vector<std::int64_t> orders;
    std::vector<std::size_t> strides;
    std::vector<std::int64_t> scales;  // L / N_j
    std::size_t order = 1;
    std::int64_t lcm = 1;
    Rational weight_g;
    Rational weight_dual;
    double weight_g_d = 1.0;
    double weight_dual_d = 1.0;
    std::vector<Complex> phases;  // exp(2 pi i k / L)
  };

  explicit FiniteAbelianGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  void check_coords(std::span<const std::int64_t> coords, const char* what) const;
  std::size_t flatten(std::span<const std::int64_t> coords) const;

  std::shared_ptr<const Data> data_;
};

}  // namespace subtile
