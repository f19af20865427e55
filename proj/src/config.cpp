#include "subtile/config.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace subtile {

namespace {

using nlohmann::json;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

// Strips a trailing comment that is not inside a string literal.
std::string strip_comment(std::string_view line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"' && (i == 0 || line[i - 1] != '\\')) in_string = !in_string;
    if (line[i] == '#' && !in_string) return std::string(line.substr(0, i));
  }
  return std::string(line);
}

std::int64_t as_int(const json& v, std::size_t line, const char* key) {
  if (!v.is_number_integer()) throw ConfigError(line, std::string(key) + ": expected an integer");
  return v.get<std::int64_t>();
}

PointSpec as_point(const json& v, std::size_t line, const char* key) {
  PointSpec p;
  if (v.is_number_integer()) {
    const auto i = v.get<std::int64_t>();
    if (i < 0) throw ConfigError(line, std::string(key) + ": negative element index");
    p.index = static_cast<std::size_t>(i);
  } else if (v.is_array()) {
    for (const auto& c : v) p.coords.push_back(as_int(c, line, key));
  } else {
    throw ConfigError(line, std::string(key) + ": expected an index or a coordinate array");
  }
  return p;
}

std::vector<PointSpec> as_points(const json& v, std::size_t line, const char* key) {
  if (!v.is_array()) throw ConfigError(line, std::string(key) + ": expected an array");
  std::vector<PointSpec> out;
  for (const auto& e : v) out.push_back(as_point(e, line, key));
  return out;
}

Complex as_complex(const json& v, std::size_t line) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw ConfigError(line, "psi: expected a number or an [re, im] pair");
}

}  // namespace

std::size_t PointSpec::resolve(const FiniteAbelianGroup& group) const {
  if (index) {
    if (*index >= group.order()) {
      throw StructuralError("element index " + std::to_string(*index) + " out of range for |G| = " +
                            std::to_string(group.order()));
    }
    return *index;
  }
  return group.index_of(group.element(coords));
}

Config parse_config(std::string_view text) {
  Config config;
  bool have_group = false;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(line_no, "expected 'key = value'");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value_text = trim(std::string_view(line).substr(eq + 1));
    if (key.empty()) throw ConfigError(line_no, "missing key");
    if (!seen.insert(key).second) throw ConfigError(line_no, "duplicate key '" + key + "'");

    json value;
    try {
      value = json::parse(value_text);
    } catch (const json::parse_error&) {
      throw ConfigError(line_no, "value for '" + key + "' is not a valid literal");
    }

    if (key == "group") {
      if (!value.is_array()) throw ConfigError(line_no, "group: expected an array of cyclic orders");
      for (const auto& n : value) {
        const auto order = as_int(n, line_no, "group");
        if (order < 1) throw ConfigError(line_no, "group: cyclic orders must be >= 1");
        config.group.push_back(order);
      }
      have_group = true;
    } else if (key == "weight_g") {
      try {
        if (value.is_string()) {
          config.weight_g = parse_rational(value.get<std::string>());
        } else {
          config.weight_g = Rational(as_int(value, line_no, "weight_g"));
        }
      } catch (const std::invalid_argument& e) {
        throw ConfigError(line_no, std::string("weight_g: ") + e.what());
      }
      if (config.weight_g <= Rational(0)) throw ConfigError(line_no, "weight_g must be positive");
    } else if (key == "lattice_generators") {
      config.lattice_generators = as_points(value, line_no, "lattice_generators");
    } else if (key == "omega") {
      config.omega = as_points(value, line_no, "omega");
    } else if (key == "psi") {
      if (!value.is_array()) throw ConfigError(line_no, "psi: expected an array");
      std::vector<Complex> psi;
      for (const auto& v : value) psi.push_back(as_complex(v, line_no));
      config.psi = std::move(psi);
    } else if (key == "tolerance") {
      if (!value.is_number() || value.get<double>() <= 0.0) {
        throw ConfigError(line_no, "tolerance: expected a positive number");
      }
      config.tolerance = value.get<double>();
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) throw ConfigError(line_no, "seed: expected a non-negative integer");
      config.seed = value.get<std::uint64_t>();
    } else {
      throw ConfigError(line_no, "unknown key '" + key + "'");
    }
  }
  if (!have_group) throw ConfigError(0, "missing required key 'group'");
  return config;
}

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(0, "cannot open config file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::vector<PointSpec> parse_point_list(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  std::vector<PointSpec> out;
  if (compact.empty()) return out;

  auto parse_uint = [](const std::string& s) -> std::int64_t {
    std::int64_t v = 0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc{} || ptr != end) throw std::invalid_argument("malformed point '" + s + "'");
    return v;
  };

  if (compact.front() == '(') {
    std::size_t pos = 0;
    while (pos < compact.size()) {
      if (compact[pos] != '(') throw std::invalid_argument("expected '(' in point list");
      const auto close = compact.find(')', pos);
      if (close == std::string::npos) throw std::invalid_argument("unbalanced '(' in point list");
      PointSpec p;
      std::stringstream inner(compact.substr(pos + 1, close - pos - 1));
      std::string item;
      while (std::getline(inner, item, ',')) p.coords.push_back(parse_uint(item));
      out.push_back(std::move(p));
      pos = close + 1;
      if (pos < compact.size()) {
        if (compact[pos] != ',') throw std::invalid_argument("expected ',' between points");
        ++pos;
      }
    }
    return out;
  }

  std::stringstream in(compact);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto v = parse_uint(item);
    if (v < 0) throw std::invalid_argument("negative element index");
    out.push_back(PointSpec{static_cast<std::size_t>(v), {}});
  }
  return out;
}

std::vector<Complex> parse_complex_list(std::string_view text) {
  std::vector<Complex> out;
  std::stringstream in{std::string(text)};
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    const auto colon = item.find(':');
    try {
      std::size_t used = 0;
      if (colon == std::string::npos) {
        out.emplace_back(std::stod(item, &used), 0.0);
        if (used != item.size()) throw std::invalid_argument(item);
      } else {
        const auto re_text = item.substr(0, colon);
        const auto im_text = item.substr(colon + 1);
        std::size_t used_im = 0;
        const double re = std::stod(re_text, &used);
        const double im = std::stod(im_text, &used_im);
        if (used != re_text.size() || used_im != im_text.size()) throw std::invalid_argument(item);
        out.emplace_back(re, im);
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed complex value '" + item + "'");
    }
  }
  return out;
}

FiniteAbelianGroup build_group(const Config& config) {
  return FiniteAbelianGroup(config.group, config.weight_g);
}

LatticeSubgroup build_lattice(const FiniteAbelianGroup& group, const Config& config) {
  std::vector<std::size_t> gens;
  for (const auto& p : config.lattice_generators) gens.push_back(p.resolve(group));
  return subgroup_from_index_generators(group, gens);
}

MeasuredSet build_omega(const FiniteAbelianGroup& group, const std::vector<PointSpec>& points) {
  std::vector<std::size_t> indices;
  for (const auto& p : points) indices.push_back(p.resolve(group));
  return MeasuredSet(group, std::move(indices));
}

}  // namespace subtile
