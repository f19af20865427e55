// Configuration files: one `key = value` per line, `#` starts a comment,
// values are JSON literals (arrays, numbers, strings).
//
//   group = [4]
//   weight_g = "1/2"
//   lattice_generators = [[2]]
//   omega = [0, 1]            # flat indices, or coordinate tuples [[0,1],[1,1]]
//   psi = [1, [0.5, 0.5]]     # real numbers or [re, im] pairs, one per point
//   tolerance = 1e-9
//   seed = 7

#pragma once

#include "subtile/group.hpp"
#include "subtile/lattice.hpp"
#include "subtile/measured_set.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace subtile {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::size_t line, const std::string& message)
      : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A point given either as a flat lexicographic index or as coordinates.
struct PointSpec {
  std::optional<std::size_t> index;
  std::vector<std::int64_t> coords;

  std::size_t resolve(const FiniteAbelianGroup& group) const;
};

struct Config {
  std::vector<std::int64_t> group;
  Rational weight_g{1};
  std::vector<PointSpec> lattice_generators;
  std::optional<std::vector<PointSpec>> omega;
  std::optional<std::vector<Complex>> psi;
  double tolerance = 1e-9;
  std::uint64_t seed = 1;
};

Config parse_config(std::string_view text);
Config load_config(const std::filesystem::path& path);

/// "0,1,5" or "(0,1),(1,1)"; whitespace is ignored.
std::vector<PointSpec> parse_point_list(std::string_view text);
/// Comma-separated reals; "a+bi" style is not supported, use "re:im".
std::vector<Complex> parse_complex_list(std::string_view text);

FiniteAbelianGroup build_group(const Config& config);
LatticeSubgroup build_lattice(const FiniteAbelianGroup& group, const Config& config);
MeasuredSet build_omega(const FiniteAbelianGroup& group, const std::vector<PointSpec>& points);

}  // namespace subtile
