// JSON encodings of the report types. Rationals are "p/q" strings, complex
// numbers are [re, im] pairs, group elements are coordinate arrays, and sets
// are arrays of flat indices.

#pragma once

#include "subtile/fourier.hpp"
#include "subtile/frames.hpp"
#include "subtile/identities.hpp"
#include "subtile/tiling.hpp"
#include "subtile/verifier.hpp"

#include <json.hpp>

namespace nlohmann {

template <>
struct adl_serializer<subtile::Rational> {
  static void to_json(json& j, const subtile::Rational& r) { j = subtile::format_rational(r); }
  static void from_json(const json& j, subtile::Rational& r) {
    r = subtile::parse_rational(j.get<std::string>());
  }
};

template <>
struct adl_serializer<subtile::Complex> {
  static void to_json(json& j, const subtile::Complex& z) { j = json::array({z.real(), z.imag()}); }
  static void from_json(const json& j, subtile::Complex& z) {
    z = {j.at(0).get<double>(), j.at(1).get<double>()};
  }
};

}  // namespace nlohmann

namespace subtile {

void to_json(nlohmann::json& j, const GroupElement& g);
void from_json(const nlohmann::json& j, GroupElement& g);
void to_json(nlohmann::json& j, const ViolatingPair& p);
void from_json(const nlohmann::json& j, ViolatingPair& p);
void to_json(nlohmann::json& j, const TilingVerdict& v);
void from_json(const nlohmann::json& j, TilingVerdict& v);
void to_json(nlohmann::json& j, const Condition2Result& r);
void from_json(const nlohmann::json& j, Condition2Result& r);
void to_json(nlohmann::json& j, const TranslateOrthonormality& r);
void from_json(const nlohmann::json& j, TranslateOrthonormality& r);
void to_json(nlohmann::json& j, const FrameReport& r);
void from_json(const nlohmann::json& j, FrameReport& r);
void to_json(nlohmann::json& j, const ModulatedFrameReport& r);
void from_json(const nlohmann::json& j, ModulatedFrameReport& r);
void to_json(nlohmann::json& j, const ObstructionWitness& w);
void from_json(const nlohmann::json& j, ObstructionWitness& w);
void to_json(nlohmann::json& j, const IdentityChecks& c);
void from_json(const nlohmann::json& j, IdentityChecks& c);
void to_json(nlohmann::json& j, const EquivalenceReport& r);
void from_json(const nlohmann::json& j, EquivalenceReport& r);
void to_json(nlohmann::json& j, const IdentitySuiteReport& r);
void to_json(nlohmann::json& j, const FugledeRow& r);
void from_json(const nlohmann::json& j, FugledeRow& r);
void to_json(nlohmann::json& j, const FugledeReport& r);
void from_json(const nlohmann::json& j, FugledeReport& r);
void to_json(nlohmann::json& j, const BracketFunction& b);

inline nlohmann::json to_json(const EquivalenceReport& r) {
  nlohmann::json j;
  to_json(j, r);
  return j;
}

}  // namespace subtile
