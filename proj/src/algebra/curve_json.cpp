#include "cct/algebra/curve_json.hpp"

namespace cct {

void to_json(nlohmann::json& j, const FieldSpec& f) {
  if (f.kind == FieldSpec::Kind::rationals)
    j = {{"kind", "rationals"}};
  else
    j = {{"kind", "fp"}, {"p", f.p}};
}

void from_json(const nlohmann::json& j, FieldSpec& f) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "rationals")
    f = FieldSpec::rationals();
  else if (kind == "fp")
    f = FieldSpec::prime(j.at("p").get<std::uint32_t>());
  else
    throw Error("parse_error", "unknown field kind '" + kind + "'");
}

void to_json(nlohmann::json& j, const CurveData& c) {
  nlohmann::json lambdas = nlohmann::json::array();
  for (const auto& l : c.lambdas) lambdas.push_back(l.str());
  j = {{"weights", c.weights},
       {"field", c.field},
       {"lambdas", lambdas},
       {"homogeneous_samples", c.homogeneous_samples}};
}

void from_json(const nlohmann::json& j, CurveData& c) {
  try {
    std::vector<Rational> lambdas;
    if (j.contains("lambdas"))
      for (const auto& l : j.at("lambdas")) lambdas.push_back(parse_rational(l.get<std::string>()));
    FieldSpec field;
    if (j.contains("field")) field = j.at("field").get<FieldSpec>();
    std::vector<std::string> samples{"x1", "x2"};
    if (j.contains("homogeneous_samples")) samples = j.at("homogeneous_samples").get<std::vector<std::string>>();
    c = make_curve(j.at("weights").get<std::vector<int>>(), field, std::move(lambdas), std::move(samples));
  } catch (const nlohmann::json::exception& e) {
    throw Error("parse_error", std::string("malformed curve: ") + e.what());
  }
}

}  // namespace cct
