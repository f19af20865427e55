#include "subtile/config.hpp"
#include "subtile/identities.hpp"
#include "subtile/report_json.hpp"
#include "subtile/verifier.hpp"

#include <doctest.h>

#include <random>

using namespace subtile;

namespace {

Config z4_config(std::vector<std::size_t> omega) {
  Config c = parse_config("group = [4]\nlattice_generators = [[2]]\n");
  std::vector<PointSpec> pts;
  for (auto x : omega) pts.push_back(PointSpec{x, {}});
  c.omega = pts;
  return c;
}

}  // namespace

TEST_CASE("config parsing") {
  const auto c = parse_config(R"(# comment line
group = [2, 4]   # trailing comment
weight_g = "1/2"
lattice_generators = [[1, 2], 6]
omega = [0, [1, 1]]
psi = [1, [0.5, -0.5]]
tolerance = 1e-8
seed = 7
)");
  CHECK(c.group == std::vector<std::int64_t>{2, 4});
  CHECK(c.weight_g == Rational(1, 2));
  REQUIRE(c.lattice_generators.size() == 2);
  CHECK(c.lattice_generators[0].coords == std::vector<std::int64_t>{1, 2});
  CHECK(c.lattice_generators[1].index == std::optional<std::size_t>{6});
  REQUIRE(c.omega.has_value());
  CHECK(c.psi == std::optional<std::vector<Complex>>{std::vector<Complex>{1.0, {0.5, -0.5}}});
  CHECK(c.tolerance == 1e-8);
  CHECK(c.seed == 7);

  const auto g = build_group(c);
  CHECK(g.weight_dual() == Rational(1, 4));
  CHECK(build_lattice(g, c).element_indices() == std::vector<std::size_t>{0, 6});
  CHECK(build_omega(g, *c.omega).indices() == std::vector<std::size_t>{0, 5});

  CHECK(parse_config("group = [3]\nweight_g = 2\n").weight_g == Rational(2));
}

TEST_CASE("config errors carry line numbers") {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_config(text);
    } catch (const ConfigError& e) {
      return e.line();
    }
    return 999;
  };
  CHECK(line_of("group = [4]\nbogus = 1\n") == 2);
  CHECK(line_of("group = [4]\n\ngroup = [4]\n") == 3);
  CHECK(line_of("group = [0]\n") == 1);
  CHECK(line_of("group = [4]\nweight_g = \"0\"\n") == 2);
  CHECK(line_of("group = [4]\nweight_g = \"1/x\"\n") == 2);
  CHECK(line_of("# c\ngroup [4]\n") == 2);
  CHECK(line_of("group = [4\n") == 1);
  CHECK(line_of("group = [4]\nomega = [-1]\n") == 2);
  CHECK(line_of("group = [4]\npsi = [\"a\"]\n") == 2);
  CHECK(line_of("group = [4]\ntolerance = -1\n") == 2);
  CHECK(line_of("lattice_generators = []\n") == 0);  // missing group
  try {
    parse_config("group = [4]\nbogus = 1\n");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).rfind("line 2: ", 0) == 0);
  }
  CHECK_THROWS_AS(load_config("/nonexistent/file.toml"), ConfigError);
}

TEST_CASE("point and complex lists") {
  auto pts = parse_point_list("0, 1,5");
  REQUIRE(pts.size() == 3);
  CHECK(*pts[2].index == 5);
  pts = parse_point_list("(0,1),(1, 1)");
  REQUIRE(pts.size() == 2);
  CHECK(pts[1].coords == std::vector<std::int64_t>{1, 1});
  CHECK(parse_point_list("").empty());
  CHECK_THROWS_AS(parse_point_list("1-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_point_list("(0,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_point_list("-1"), std::invalid_argument);

  const auto z = parse_complex_list("1, 0.5:-2");
  CHECK(z == std::vector<Complex>{1.0, {0.5, -2.0}});
  CHECK_THROWS_AS(parse_complex_list("1x"), std::invalid_argument);

  const FiniteAbelianGroup g({4});
  const PointSpec seven{7, {}};
  CHECK_THROWS_AS(seven.resolve(g), StructuralError);
}

TEST_CASE("verify: tiling set") {
  const auto r = verify_triple(z4_config({0, 1}));
  CHECK(r.condition1);
  CHECK(r.condition2);
  CHECK(r.condition3);
  CHECK(r.condition4);
  CHECK(r.condition5);
  CHECK(r.consistent);
  CHECK(r.tiling.is_tiling);
  CHECK(r.orthogonal_basis);
  CHECK(r.tight_constant_observed == doctest::Approx(2.0));
  CHECK(r.tight_constant_matches);
  CHECK_FALSE(r.witness.has_value());
  CHECK(r.identities.hold());
  CHECK(r.ok());
  CHECK(r.annihilator == std::vector<std::size_t>{0, 2});
  CHECK(r.cross_section == std::vector<std::size_t>{0, 1});
  CHECK_NOTHROW(require_consistent(r));
}

TEST_CASE("verify: overlapping set") {
  const auto r = verify_triple(z4_config({0, 2}));
  CHECK_FALSE(r.condition1);
  CHECK_FALSE(r.condition2);
  CHECK_FALSE(r.condition3);
  CHECK_FALSE(r.condition4);
  CHECK_FALSE(r.condition5);
  CHECK(r.consistent);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->max_pairing < 1e-12);
  CHECK(r.ok());
}

TEST_CASE("verify: strict sub-tiling set") {
  const auto r = verify_triple(z4_config({0}));
  CHECK(r.condition1);
  CHECK(r.condition2);
  CHECK(r.condition3);
  CHECK(r.condition4);
  CHECK(r.condition5);
  CHECK_FALSE(r.tiling.is_tiling);
  CHECK_FALSE(r.orthogonal_basis);
  CHECK(r.ok());
}

TEST_CASE("verify: configured window and input errors") {
  auto c = z4_config({0, 1});
  c.psi = std::vector<Complex>{1.0, 2.0};
  const auto r = verify_triple(c);
  CHECK(r.condition5_evidence.frame.spectrum[1] == doctest::Approx(8.0));

  c.psi = std::vector<Complex>{1.0, 0.0};
  CHECK_THROWS_AS(verify_triple(c), PreconditionError);
  CHECK_THROWS_AS(verify_triple(z4_config({})), ConfigError);
  Config none = parse_config("group = [4]\n");
  CHECK_THROWS_AS(verify_triple(none), ConfigError);
}

TEST_CASE("require_consistent reports a tampered report") {
  auto r = verify_triple(z4_config({0, 1}));
  r.condition4 = false;
  r.consistent = false;
  try {
    require_consistent(r);
    FAIL("expected InconsistencyError");
  } catch (const InconsistencyError& e) {
    CHECK(std::string(e.what()).find("disagree") != std::string::npos);
    CHECK(e.evidence().find("\"conditions\"") != std::string::npos);
  }
}

TEST_CASE("reports round-trip through JSON") {
  for (std::vector<std::size_t> omega : {std::vector<std::size_t>{0, 1}, {0, 2}, {3}}) {
    const auto r = verify_triple(z4_config(omega));
    const auto text = to_json(r).dump();
    const auto back = nlohmann::json::parse(text).get<EquivalenceReport>();
    CHECK(back.condition1 == r.condition1);
    CHECK(to_json(back) == to_json(r));
  }
  const auto j = to_json(verify_triple(z4_config({0, 1})));
  CHECK(j["conditions"]["1_subtiling"] == true);
  CHECK(j["weight_g"] == "1");
  CHECK(j["condition4"]["A"].is_number());
  CHECK(j["witness"].is_null());
  CHECK(j["power_spectrum"][0].size() == 2);

  const auto f = fuglede_suite(FiniteAbelianGroup({2, 2}));
  nlohmann::json fj;
  to_json(fj, f);
  CHECK(nlohmann::json::parse(fj.dump()).get<FugledeReport>() == f);
}

TEST_CASE("randomized triples agree exactly after serialization") {
  std::mt19937_64 rng(61);
  const FiniteAbelianGroup g({2, 6}, Rational(1, 2));
  const auto lattices = all_subgroups(g);
  for (int t = 0; t < 20; ++t) {
    const auto& l = lattices[rng() % lattices.size()];
    VerifyOptions opts;
    opts.seed = rng();
    const auto r = verify_triple(l, random_subset(g, rng), opts);
    CHECK(r.ok());
    const auto back = nlohmann::json::parse(to_json(r).dump()).get<EquivalenceReport>();
    CHECK(back == r);
  }
}

TEST_CASE("Fuglede suite on small groups") {
  const auto k4 = fuglede_suite(FiniteAbelianGroup({2, 2}));
  CHECK(k4.exhaustive);
  CHECK(k4.rows.size() == 5);
  CHECK(k4.total_cases == 16 * 5);
  CHECK(k4.total_disagreements == 0);

  // Lambda = G is the last (largest) subgroup: only singletons tile.
  const auto z6 = fuglede_suite(FiniteAbelianGroup({6}));
  const auto& whole = z6.rows.back();
  CHECK(whole.lattice.size() == 6);
  CHECK(whole.tilings == 6);
  CHECK(whole.orthogonal_bases == 6);

  FugledeOptions sampled;
  sampled.cap = 64;
  const auto big = fuglede_suite(FiniteAbelianGroup({2, 6}), sampled);
  CHECK_FALSE(big.exhaustive);
  CHECK(big.subsets_per_lattice == 64);
  CHECK(big.total_disagreements == 0);
}

TEST_CASE("identity suite") {
  const FiniteAbelianGroup g({4, 6}, Rational(3));
  for (const auto& l : all_subgroups(g)) {
    IdentitySuiteOptions opts;
    opts.samples = 10;
    const auto r = run_identity_suite(l, opts);
    CHECK(r.holds());
    CHECK(r.orthonormal_cases >= 5);  // every even sample is orthonormal by construction
  }
}
