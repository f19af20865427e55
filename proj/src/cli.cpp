#include "subtile/cli.hpp"

#include "subtile/config.hpp"
#include "subtile/fourier.hpp"
#include "subtile/identities.hpp"
#include "subtile/report_json.hpp"
#include "subtile/tiling.hpp"
#include "subtile/verifier.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>

namespace subtile {

namespace {

using nlohmann::json;

struct CommonOptions {
  std::string config_path;
  std::string out_path;
};

void emit(const json& report, const CommonOptions& common, std::ostream& out) {
  if (common.out_path.empty()) {
    out << report.dump(2) << "\n";
    return;
  }
  std::ofstream file(common.out_path);
  if (!file) throw std::runtime_error("cannot write '" + common.out_path + "'");
  file << report.dump(2) << "\n";
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  file << header << "\n" << std::setprecision(17);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) file << (i ? "," : "") << row[i];
    file << "\n";
  }
}

Config load_with_overrides(const CommonOptions& common, const std::string& omega_text,
                           const std::string& psi_text) {
  Config config = load_config(common.config_path);
  if (!omega_text.empty()) config.omega = parse_point_list(omega_text);
  if (!psi_text.empty()) config.psi = parse_complex_list(psi_text);
  return config;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice sub-tilings and exponential frames on finite abelian groups", "subtile"};
  app.require_subcommand(1);

  CommonOptions common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-c,--config", common.config_path, "configuration file")->required();
    sub->add_option("-o,--out", common.out_path, "write the JSON report here instead of stdout");
  };

  std::string omega_text;
  std::string psi_text;
  std::string csv_path;
  std::string spectrum_csv_path;
  std::optional<std::uint64_t> seed;

  auto* verify = app.add_subcommand("verify", "check every condition on one (G, L, Omega) triple");
  add_common(verify);
  verify->add_option("--omega", omega_text, "indices '0,1' or tuples '(0,1),(1,1)'");
  verify->add_option("--psi", psi_text, "window values 're' or 're:im', comma separated");
  verify->add_option("--csv", csv_path, "write chi_index,H_value");
  verify->add_option("--spectrum-csv", spectrum_csv_path, "write index,eigenvalue of the frame operator");
  verify->add_option("--seed", seed, "seed for the sampled identity checks");

  std::size_t size = 0;
  bool tilings_only = false;
  auto* search = app.add_subcommand("search", "enumerate sub-tiling sets of a given size");
  add_common(search);
  search->add_option("--size", size, "number of points")->required();
  search->add_flag("--tilings-only", tilings_only, "keep only sets that tile");

  std::size_t cap = 4096;
  auto* fuglede = app.add_subcommand("fuglede", "tiling vs orthogonal exponential basis, all subgroups");
  add_common(fuglede);
  fuglede->add_option("--cap", cap, "exhaustive up to this many subsets, sampled above");
  fuglede->add_option("--seed", seed, "seed for sampled subsets");

  auto* bracket_cmd = app.add_subcommand("bracket", "bracket [phi, phi] for phi = 1_Omega / sqrt|Omega|");
  add_common(bracket_cmd);
  bracket_cmd->add_option("--omega", omega_text, "indices '0,1' or tuples '(0,1),(1,1)'");
  bracket_cmd->add_option("--csv", csv_path, "write chi_index,bracket_re,bracket_im");

  std::size_t samples = 100;
  double identity_tolerance = 1e-10;
  auto* identities = app.add_subcommand("identities", "randomized identity suite on the configured lattice");
  add_common(identities);
  identities->add_option("--samples", samples, "random inputs per identity");
  identities->add_option("--seed", seed, "random seed");
  identities->add_option("--tolerance", identity_tolerance, "absolute tolerance");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (verify->parsed()) {
      Config config = load_with_overrides(common, omega_text, psi_text);
      if (seed) config.seed = *seed;
      const auto report = verify_triple(config);
      emit(to_json(report), common, out);
      if (!csv_path.empty()) {
        std::vector<std::vector<double>> rows;
        for (std::size_t i = 0; i < report.power_spectrum.size(); ++i) {
          rows.push_back({static_cast<double>(i), report.power_spectrum[i].real()});
        }
        write_csv(csv_path, "chi_index,H_value", rows);
      }
      if (!spectrum_csv_path.empty()) {
        std::vector<std::vector<double>> rows;
        const auto& spectrum = report.condition4_evidence.spectrum;
        for (std::size_t i = 0; i < spectrum.size(); ++i) rows.push_back({static_cast<double>(i), spectrum[i]});
        write_csv(spectrum_csv_path, "index,eigenvalue", rows);
      }
      try {
        require_consistent(report);
      } catch (const InconsistencyError& e) {
        err << e.what() << "\n" << e.evidence() << "\n";
        return exit_inconsistent;
      }
      return exit_ok;
    }

    if (search->parsed()) {
      const Config config = load_config(common.config_path);
      const auto group = build_group(config);
      const auto lattice = build_lattice(group, config);
      const auto sets = enumerate_subtilings(lattice, size);
      json listed = json::array();
      std::size_t tilings = 0;
      for (const auto& s : sets) {
        const bool tiles = !s.empty() && check_subtiling(lattice, s).is_tiling;
        tilings += tiles;
        if (!tilings_only || tiles) listed.push_back(s.indices());
      }
      json report = {{"group", group.cyclic_orders()},
                     {"lattice", lattice.element_indices()},
                     {"size", size},
                     {"tilings_only", tilings_only},
                     {"count", listed.size()},
                     {"subtiling_count", sets.size()},
                     {"expected_subtiling_count", subtiling_count(lattice.index(), lattice.size(), size)},
                     {"tiling_count", tilings},
                     {"zero_measure", size == 0},
                     {"sets", listed}};
      emit(report, common, out);
      return exit_ok;
    }

    if (fuglede->parsed()) {
      const Config config = load_config(common.config_path);
      FugledeOptions options;
      options.cap = cap;
      options.seed = seed.value_or(config.seed);
      const auto report = fuglede_suite(build_group(config), options);
      json j;
      to_json(j, report);
      emit(j, common, out);
      return report.total_disagreements == 0 ? exit_ok : exit_inconsistent;
    }

    if (bracket_cmd->parsed()) {
      const Config config = load_with_overrides(common, omega_text, "");
      if (!config.omega || config.omega->empty()) throw ConfigError(0, "omega is required and must be nonempty");
      const auto group = build_group(config);
      const auto lattice = build_lattice(group, config);
      const auto omega = build_omega(group, *config.omega);
      FunctionTable phi = omega.indicator();
      const double scale = 1.0 / std::sqrt(to_double(omega.measure()));
      for (auto& v : phi) v *= scale;
      const auto b = bracket(lattice, phi, phi);
      const bool identically_one = std::all_of(b.values.begin(), b.values.end(), [&](const Complex& v) {
        return std::abs(v - 1.0) < config.tolerance;
      });
      json j;
      to_json(j, b);
      j["omega"] = omega.indices();
      j["identically_one"] = identically_one;
      emit(j, common, out);
      if (!csv_path.empty()) {
        std::vector<std::vector<double>> rows;
        for (std::size_t i = 0; i < b.values.size(); ++i) {
          rows.push_back({static_cast<double>(b.base_points.indices[i]), b.values[i].real(), b.values[i].imag()});
        }
        write_csv(csv_path, "chi_index,bracket_re,bracket_im", rows);
      }
      return exit_ok;
    }

    if (identities->parsed()) {
      const Config config = load_config(common.config_path);
      const auto group = build_group(config);
      const auto lattice = build_lattice(group, config);
      IdentitySuiteOptions options;
      options.samples = samples;
      options.seed = seed.value_or(config.seed);
      options.tolerance = identity_tolerance;
      const auto report = run_identity_suite(lattice, options);
      json j;
      to_json(j, report);
      emit(j, common, out);
      return report.holds() ? exit_ok : exit_inconsistent;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace subtile
