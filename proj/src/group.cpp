#include "subtile/group.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>

namespace subtile {

namespace {

std::int64_t parse_int(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
  }
  return value;
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::int64_t num = parse_int(text.substr(0, slash));
  const std::int64_t den =
      slash == std::string_view::npos ? 1 : parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  std::string out = std::to_string(value.numerator());
  if (value.denominator() != 1) out += "/" + std::to_string(value.denominator());
  return out;
}

double to_double(const Rational& value) {
  return static_cast<double>(value.numerator()) / static_cast<double>(value.denominator());
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> cyclic_orders, Rational weight_g)
    : FiniteAbelianGroup(cyclic_orders, weight_g, [&] {
        std::int64_t order = 1;
        for (auto n : cyclic_orders) order *= n > 0 ? n : 1;
        if (weight_g <= Rational(0)) return Rational(1);  // rejected by the delegated constructor
        return Rational(1) / (weight_g * order);
      }()) {}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> cyclic_orders, Rational weight_g,
                                       Rational weight_dual) {
  auto data = std::make_shared<Data>();
  for (auto n : cyclic_orders) {
    if (n < 1) throw StructuralError("cyclic orders must be >= 1, got " + std::to_string(n));
  }
  if (weight_g <= Rational(0) || weight_dual <= Rational(0)) {
    throw StructuralError("Haar weights must be positive");
  }
  data->orders = std::move(cyclic_orders);
  const std::size_t k = data->orders.size();
  data->strides.assign(k, 1);
  for (std::size_t j = k; j-- > 0;) {
    data->strides[j] = data->order;
    data->order *= static_cast<std::size_t>(data->orders[j]);
  }
  for (auto n : data->orders) data->lcm = std::lcm(data->lcm, n);
  data->scales.reserve(k);
  for (auto n : data->orders) data->scales.push_back(data->lcm / n);

  if (weight_g * weight_dual * static_cast<std::int64_t>(data->order) != Rational(1)) {
    throw StructuralError("Haar weights violate w * w_dual * |G| = 1: " +
                          format_rational(weight_g) + " * " + format_rational(weight_dual) +
                          " * " + std::to_string(data->order));
  }
  data->weight_g = weight_g;
  data->weight_dual = weight_dual;
  data->weight_g_d = to_double(weight_g);
  data->weight_dual_d = to_double(weight_dual);

  data->phases.resize(static_cast<std::size_t>(data->lcm));
  for (std::int64_t e = 0; e < data->lcm; ++e) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) /
                         static_cast<double>(data->lcm);
    data->phases[static_cast<std::size_t>(e)] = std::polar(1.0, angle);
  }
  data_ = std::move(data);
}

FiniteAbelianGroup FiniteAbelianGroup::dual() const {
  auto data = std::make_shared<Data>(*data_);
  std::swap(data->weight_g, data->weight_dual);
  std::swap(data->weight_g_d, data->weight_dual_d);
  return FiniteAbelianGroup(std::move(data));
}

void FiniteAbelianGroup::check_coords(std::span<const std::int64_t> coords, const char* what) const {
  if (coords.size() != rank()) {
    throw StructuralError(std::string(what) + " has " + std::to_string(coords.size()) +
                          " coordinates, group has rank " + std::to_string(rank()));
  }
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (coords[j] < 0 || coords[j] >= data_->orders[j]) {
      throw StructuralError(std::string(what) + " coordinate " + std::to_string(j) +
                            " out of range [0, " + std::to_string(data_->orders[j]) + ")");
    }
  }
}

std::size_t FiniteAbelianGroup::flatten(std::span<const std::int64_t> coords) const {
  std::size_t index = 0;
  for (std::size_t j = 0; j < coords.size(); ++j) {
    index += static_cast<std::size_t>(coords[j]) * data_->strides[j];
  }
  return index;
}

GroupElement FiniteAbelianGroup::element(std::span<const std::int64_t> coords) const {
  if (coords.size() != rank()) {
    throw StructuralError("element has " + std::to_string(coords.size()) +
                          " coordinates, group has rank " + std::to_string(rank()));
  }
  GroupElement g;
  g.coords.reserve(coords.size());
  for (std::size_t j = 0; j < coords.size(); ++j) g.coords.push_back(mod(coords[j], data_->orders[j]));
  return g;
}

Character FiniteAbelianGroup::character(std::span<const std::int64_t> coords) const {
  return Character{element(coords).coords};
}

GroupElement FiniteAbelianGroup::zero() const {
  return GroupElement{std::vector<std::int64_t>(rank(), 0)};
}

std::size_t FiniteAbelianGroup::index_of(const GroupElement& g) const {
  check_coords(g.coords, "element");
  return flatten(g.coords);
}

std::size_t FiniteAbelianGroup::index_of(const Character& chi) const {
  check_coords(chi.coords, "character");
  return flatten(chi.coords);
}

GroupElement FiniteAbelianGroup::element_at(std::size_t index) const {
  if (index >= order()) throw StructuralError("element index out of range");
  GroupElement g;
  g.coords.reserve(rank());
  for (std::size_t j = 0; j < rank(); ++j) g.coords.push_back(coord(index, j));
  return g;
}

Character FiniteAbelianGroup::character_at(std::size_t index) const {
  return Character{element_at(index).coords};
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  return element_at(add_index(index_of(a), index_of(b)));
}

GroupElement FiniteAbelianGroup::negate(const GroupElement& a) const {
  return element_at(neg_index(index_of(a)));
}

Character FiniteAbelianGroup::add(const Character& a, const Character& b) const {
  return character_at(add_index(index_of(a), index_of(b)));
}

Complex FiniteAbelianGroup::pairing(const Character& chi, const GroupElement& g) const {
  return pairing_index(index_of(chi), index_of(g));
}

bool FiniteAbelianGroup::pairing_is_one(const Character& chi, const GroupElement& g) const {
  return pairing_exponent(index_of(chi), index_of(g)) == 0;
}

std::size_t FiniteAbelianGroup::add_index(std::size_t a, std::size_t b) const {
  std::size_t out = 0;
  for (std::size_t j = 0; j < rank(); ++j) {
    std::int64_t s = coord(a, j) + coord(b, j);
    if (s >= data_->orders[j]) s -= data_->orders[j];
    out += static_cast<std::size_t>(s) * data_->strides[j];
  }
  return out;
}

std::size_t FiniteAbelianGroup::sub_index(std::size_t a, std::size_t b) const {
  std::size_t out = 0;
  for (std::size_t j = 0; j < rank(); ++j) {
    std::int64_t s = coord(a, j) - coord(b, j);
    if (s < 0) s += data_->orders[j];
    out += static_cast<std::size_t>(s) * data_->strides[j];
  }
  return out;
}

std::size_t FiniteAbelianGroup::neg_index(std::size_t a) const { return sub_index(0, a); }

std::int64_t FiniteAbelianGroup::pairing_exponent(std::size_t chi, std::size_t g) const {
  std::int64_t e = 0;
  for (std::size_t j = 0; j < rank(); ++j) {
    e += (coord(chi, j) * coord(g, j) % data_->orders[j]) * data_->scales[j];
  }
  return e % data_->lcm;
}

Complex FiniteAbelianGroup::root_of_unity(std::int64_t exponent) const {
  return data_->phases[static_cast<std::size_t>(mod(exponent, data_->lcm))];
}

Complex FiniteAbelianGroup::inner_product(const FunctionTable& f, const FunctionTable& h) const {
  if (f.size() != order() || h.size() != order()) {
    throw StructuralError("function table size does not match |G|");
  }
  Complex sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) sum += f[i] * std::conj(h[i]);
  return weight() * sum;
}

Complex FiniteAbelianGroup::dual_inner_product(const FunctionTable& f,
                                               const FunctionTable& h) const {
  if (f.size() != order() || h.size() != order()) {
    throw StructuralError("function table size does not match |G|");
  }
  Complex sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) sum += f[i] * std::conj(h[i]);
  return dual_weight() * sum;
}

bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
  return a.data_ == b.data_ ||
         (a.data_->orders == b.data_->orders && a.data_->weight_g == b.data_->weight_g &&
          a.data_->weight_dual == b.data_->weight_dual);
}

}  // namespace subtile
