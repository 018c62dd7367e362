#pragma once

#include "cct/algebra/curve.hpp"

#include <json.hpp>

namespace cct {

void to_json(nlohmann::json& j, const FieldSpec& f);
void from_json(const nlohmann::json& j, FieldSpec& f);
void to_json(nlohmann::json& j, const CurveData& c);
/// Validates; weights are sorted on the way in.
void from_json(const nlohmann::json& j, CurveData& c);

}  // namespace cct
