#pragma once

#include "cct/branch/branch.hpp"
#include "cct/classify/module_expr.hpp"
#include "cct/classify/point_set.hpp"
#include "cct/localization/localization.hpp"

namespace cct {

/// Regular composition factors of the summands of Y.
SimpleRegularSet regular_support(const BranchModule& y);

/// Throws unless Y is a branch module on the curve and P names known points.
void validate_pair(const CurveData& curve, const BranchModule& y, const PointSet& p);

ModuleExpr build_tilting(const CurveData& curve, const BranchModule& y, const PointSet& p);
ModuleExpr build_cotilting(const CurveData& curve, const BranchModule& y, const PointSet& p);

struct ResolvingDescriptor {
  std::vector<SimpleRegular> rays;  // by regular socle
  bool unsampled_homogeneous_rays = false;
  SimpleRegularSet finite_part;
  bool operator==(const ResolvingDescriptor&) const = default;
};

struct SerreDescriptor {
  std::vector<std::string> full_tubes;
  bool unsampled_homogeneous_tubes = false;
  std::vector<TubeObject> wings;  // wing vertices
  bool operator==(const SerreDescriptor&) const = default;
};

ResolvingDescriptor resolving_descriptor(const CurveData& curve, const BranchModule& y, const PointSet& p);
SerreDescriptor serre_descriptor(const CurveData& curve, const BranchModule& y, const PointSet& p);

struct ClassifiedPair {
  BranchModule y;
  PointSet p;
  auto operator<=>(const ClassifiedPair&) const = default;
};

/// Every branch module paired with every point-set template. Domestic curves only.
std::vector<ClassifiedPair> classify_all(const CurveData& curve);

/// Same as classify_all without the representation-type gate; used for the
/// family curve of a rational slope.
std::vector<ClassifiedPair> enumerate_pairs(const CurveData& curve);

/// Structural duality check: C_(Y,P) carries the adic pattern that
/// T_(dualize Y, P) carries in Prufer modules, under socle -> -socle.
bool dual_pattern_matches(const CurveData& curve, const BranchModule& y, const PointSet& p);

void to_json(nlohmann::json& j, const ResolvingDescriptor& d);
void to_json(nlohmann::json& j, const SerreDescriptor& d);
BranchModule branch_from_json(const CurveData& curve, const nlohmann::json& j);

}  // namespace cct
