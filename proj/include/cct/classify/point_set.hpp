#pragma once

#include "cct/algebra/curve.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace cct {

/// Subset of the curve described relative to the known points (exceptional
/// points and homogeneous samples). Cofinite sets and `all` also contain every
/// homogeneous point outside the samples.
struct PointSet {
  enum class Mode { none, finite, cofinite, all };
  Mode mode = Mode::none;
  std::vector<std::string> points;

  static PointSet none() { return {}; }
  static PointSet all() { return {Mode::all, {}}; }
  static PointSet finite(std::vector<std::string> p);
  static PointSet cofinite(std::vector<std::string> p);

  bool operator==(const PointSet&) const = default;
  auto operator<=>(const PointSet&) const = default;
};

/// Sorts the listed points and folds finite(empty) into none and
/// cofinite(empty) into all.
PointSet normalize(PointSet p);

/// Throws `unknown_point` for a listed point that is not a known point.
void validate(const CurveData& curve, const PointSet& p);

bool contains(const PointSet& p, const std::string& id);
bool contains_unsampled(const PointSet& p);
bool is_empty(const PointSet& p);

/// Known points of the curve that lie in the set.
std::vector<std::string> members(const CurveData& curve, const PointSet& p);

/// finite(S) and cofinite(S) for every subset S of the known points.
std::vector<PointSet> point_set_templates(const CurveData& curve);

void to_json(nlohmann::json& j, const PointSet& p);
void from_json(const nlohmann::json& j, PointSet& p);

}  // namespace cct
