#pragma once

#include "cct/algebra/curve.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cct {

/// Simple regular module `index` in the tube of `point`.
struct SimpleRegular {
  std::string point;
  int index = 0;
  auto operator<=>(const SimpleRegular&) const = default;
};

using SimpleRegularSet = std::set<SimpleRegular>;

/// Weight-level description of the universal localization at a set of
/// simple regular modules.
///
/// Tubes that shrink to rank one become homogeneous samples of the result
/// curve, labelled by the base point id followed by a prime. `point_map`
/// sends every surviving base point to its id on the result curve.
struct LocalizedRingDescriptor {
  CurveData base;
  SimpleRegularSet removed;
  bool finite_dimensional = true;
  CurveData result_curve;
  std::vector<std::string> removed_points;
  std::map<std::string, std::string> point_map;
  std::optional<ReprType> result_type;
  /// The cliques of all homogeneous points outside the samples are removed too.
  bool cofinite_homogeneous = false;

  bool operator==(const LocalizedRingDescriptor&) const = default;
};

}  // namespace cct
