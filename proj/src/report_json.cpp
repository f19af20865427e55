#include "subtile/report_json.hpp"

namespace subtile {

using nlohmann::json;

namespace {

template <class T>
json optional_to_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> optional_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

}  // namespace

void to_json(json& j, const GroupElement& g) { j = g.coords; }
void from_json(const json& j, GroupElement& g) { g.coords = j.get<std::vector<std::int64_t>>(); }

void to_json(json& j, const ViolatingPair& p) { j = {{"lambda", p.lambda}, {"overlap", p.overlap}}; }
void from_json(const json& j, ViolatingPair& p) {
  j.at("lambda").get_to(p.lambda);
  j.at("overlap").get_to(p.overlap);
}

void to_json(json& j, const TilingVerdict& v) {
  j = {{"subtiling", v.is_subtiling}, {"tiling", v.is_tiling}, {"violating_pairs", v.violating_pairs}};
}
void from_json(const json& j, TilingVerdict& v) {
  j.at("subtiling").get_to(v.is_subtiling);
  j.at("tiling").get_to(v.is_tiling);
  j.at("violating_pairs").get_to(v.violating_pairs);
}

void to_json(json& j, const Condition2Result& r) {
  j = {{"constant", r.is_constant}, {"target", r.target}, {"max_deviation", r.max_deviation}};
}
void from_json(const json& j, Condition2Result& r) {
  j.at("constant").get_to(r.is_constant);
  j.at("target").get_to(r.target);
  j.at("max_deviation").get_to(r.max_deviation);
}

void to_json(json& j, const TranslateOrthonormality& r) {
  j = {{"by_gram", r.by_gram},
       {"by_spectrum", r.by_spectrum},
       {"gram_row", r.gram_row},
       {"spectral_deviation", r.spectral_deviation}};
}
void from_json(const json& j, TranslateOrthonormality& r) {
  j.at("by_gram").get_to(r.by_gram);
  j.at("by_spectrum").get_to(r.by_spectrum);
  j.at("gram_row").get_to(r.gram_row);
  j.at("spectral_deviation").get_to(r.spectral_deviation);
}

void to_json(json& j, const FrameReport& r) {
  j = {{"A", r.lower_bound},
       {"B", r.upper_bound},
       {"tight", r.is_tight},
       {"constant", optional_to_json(r.tight_constant)},
       {"spectrum", r.spectrum},
       {"frame", r.is_frame}};
}
void from_json(const json& j, FrameReport& r) {
  j.at("A").get_to(r.lower_bound);
  j.at("B").get_to(r.upper_bound);
  j.at("tight").get_to(r.is_tight);
  r.tight_constant = optional_from_json<double>(j.at("constant"));
  j.at("spectrum").get_to(r.spectrum);
  j.at("frame").get_to(r.is_frame);
}

void to_json(json& j, const ModulatedFrameReport& r) {
  j = {{"frame_report", r.frame},
       {"window_lower", r.window_lower},
       {"window_upper", r.window_upper},
       {"bounds_respected", r.bounds_respected},
       {"diagonal_deviation", optional_to_json(r.diagonal_deviation)}};
}
void from_json(const json& j, ModulatedFrameReport& r) {
  j.at("frame_report").get_to(r.frame);
  j.at("window_lower").get_to(r.window_lower);
  j.at("window_upper").get_to(r.window_upper);
  j.at("bounds_respected").get_to(r.bounds_respected);
  r.diagonal_deviation = optional_from_json<double>(j.at("diagonal_deviation"));
}

void to_json(json& j, const ObstructionWitness& w) {
  j = {{"lambda1", w.lambda1}, {"lambda2", w.lambda2}, {"omega1", w.omega1},
       {"omega2", w.omega2},   {"values", w.values},   {"max_pairing", w.max_pairing}};
}
void from_json(const json& j, ObstructionWitness& w) {
  j.at("lambda1").get_to(w.lambda1);
  j.at("lambda2").get_to(w.lambda2);
  j.at("omega1").get_to(w.omega1);
  j.at("omega2").get_to(w.omega2);
  j.at("values").get_to(w.values);
  j.at("max_pairing").get_to(w.max_pairing);
}

void to_json(json& j, const IdentityChecks& c) {
  j = {{"weil", c.weil},
       {"plancherel", c.plancherel},
       {"bracket", c.bracket},
       {"coefficients", c.coefficients},
       {"coefficient_scale", c.coefficient_scale},
       {"orthonormality_routes_agree", c.orthonormality_routes_agree},
       {"primal_size", c.primal_size},
       {"dual_size", c.dual_size},
       {"size_product", c.primal_size * c.dual_size},
       {"tolerance", c.tolerance},
       {"hold", c.hold()}};
}
void from_json(const json& j, IdentityChecks& c) {
  j.at("weil").get_to(c.weil);
  j.at("plancherel").get_to(c.plancherel);
  j.at("bracket").get_to(c.bracket);
  j.at("coefficients").get_to(c.coefficients);
  j.at("coefficient_scale").get_to(c.coefficient_scale);
  j.at("orthonormality_routes_agree").get_to(c.orthonormality_routes_agree);
  j.at("primal_size").get_to(c.primal_size);
  j.at("dual_size").get_to(c.dual_size);
  j.at("tolerance").get_to(c.tolerance);
}

void to_json(json& j, const EquivalenceReport& r) {
  j = {{"group", r.group},
       {"weight_g", r.weight_g},
       {"lattice", r.lattice},
       {"annihilator", r.annihilator},
       {"cross_section", r.cross_section},
       {"omega", r.omega},
       {"psi", r.psi},
       {"conditions",
        {{"1_subtiling", r.condition1},
         {"2_constant_power_spectrum", r.condition2},
         {"3_orthonormal_translates", r.condition3},
         {"4_exponential_frame", r.condition4},
         {"5_modulated_frame", r.condition5}}},
       {"tiling", r.tiling},
       {"condition2", r.condition2_evidence},
       {"condition3", r.condition3_evidence},
       {"condition4", r.condition4_evidence},
       {"condition5", r.condition5_evidence},
       {"power_spectrum", r.power_spectrum},
       {"orthogonal_basis", r.orthogonal_basis},
       {"witness", optional_to_json(r.witness)},
       {"consistent", r.consistent},
       {"tight_constant_observed", r.tight_constant_observed},
       {"tight_constant_matches", r.tight_constant_matches},
       {"identities", r.identities},
       {"seed", r.seed},
       {"tolerance", r.tolerance}};
}

void from_json(const json& j, EquivalenceReport& r) {
  j.at("group").get_to(r.group);
  j.at("weight_g").get_to(r.weight_g);
  j.at("lattice").get_to(r.lattice);
  j.at("annihilator").get_to(r.annihilator);
  j.at("cross_section").get_to(r.cross_section);
  j.at("omega").get_to(r.omega);
  j.at("psi").get_to(r.psi);
  const auto& c = j.at("conditions");
  c.at("1_subtiling").get_to(r.condition1);
  c.at("2_constant_power_spectrum").get_to(r.condition2);
  c.at("3_orthonormal_translates").get_to(r.condition3);
  c.at("4_exponential_frame").get_to(r.condition4);
  c.at("5_modulated_frame").get_to(r.condition5);
  j.at("tiling").get_to(r.tiling);
  j.at("condition2").get_to(r.condition2_evidence);
  j.at("condition3").get_to(r.condition3_evidence);
  j.at("condition4").get_to(r.condition4_evidence);
  j.at("condition5").get_to(r.condition5_evidence);
  j.at("power_spectrum").get_to(r.power_spectrum);
  j.at("orthogonal_basis").get_to(r.orthogonal_basis);
  r.witness = optional_from_json<ObstructionWitness>(j.at("witness"));
  j.at("consistent").get_to(r.consistent);
  j.at("tight_constant_observed").get_to(r.tight_constant_observed);
  j.at("tight_constant_matches").get_to(r.tight_constant_matches);
  j.at("identities").get_to(r.identities);
  j.at("seed").get_to(r.seed);
  j.at("tolerance").get_to(r.tolerance);
}

void to_json(json& j, const IdentitySuiteReport& r) {
  j = {{"samples", r.samples},
       {"seed", r.seed},
       {"tolerance", r.tolerance},
       {"weil", r.weil},
       {"plancherel", r.plancherel},
       {"bracket", r.bracket},
       {"coefficients", r.coefficients},
       {"orthonormality_cases", r.orthonormality_cases},
       {"orthonormal_cases", r.orthonormal_cases},
       {"orthonormality_disagreements", r.orthonormality_disagreements},
       {"size_product", r.size_product},
       {"hold", r.holds()}};
}

void to_json(json& j, const FugledeRow& r) {
  j = {{"lattice", r.lattice},
       {"cases", r.cases},
       {"tilings", r.tilings},
       {"orthogonal_bases", r.orthogonal_bases},
       {"disagreements", r.disagreements},
       {"examples", r.examples}};
}
void from_json(const json& j, FugledeRow& r) {
  j.at("lattice").get_to(r.lattice);
  j.at("cases").get_to(r.cases);
  j.at("tilings").get_to(r.tilings);
  j.at("orthogonal_bases").get_to(r.orthogonal_bases);
  j.at("disagreements").get_to(r.disagreements);
  j.at("examples").get_to(r.examples);
}

void to_json(json& j, const FugledeReport& r) {
  j = {{"group", r.group},
       {"exhaustive", r.exhaustive},
       {"subsets_per_lattice", r.subsets_per_lattice},
       {"total_cases", r.total_cases},
       {"total_disagreements", r.total_disagreements},
       {"seed", r.seed},
       {"rows", r.rows}};
}
void from_json(const json& j, FugledeReport& r) {
  j.at("group").get_to(r.group);
  j.at("exhaustive").get_to(r.exhaustive);
  j.at("subsets_per_lattice").get_to(r.subsets_per_lattice);
  j.at("total_cases").get_to(r.total_cases);
  j.at("total_disagreements").get_to(r.total_disagreements);
  j.at("seed").get_to(r.seed);
  j.at("rows").get_to(r.rows);
}

void to_json(json& j, const BracketFunction& b) {
  j = {{"base_points", b.base_points.indices},
       {"dual_section_size", b.base_points.size},
       {"values", b.values}};
}

}  // namespace subtile
