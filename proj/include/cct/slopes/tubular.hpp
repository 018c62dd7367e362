#pragma once

#include "cct/algebra/grothendieck.hpp"
#include "cct/classify/tilting.hpp"
#include "cct/slopes/slope_value.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cct {

/// Rank and degree forms of a tubular canonical algebra,
///   r(x) = <x, h_inf> / <h0, h_inf>,   d(x) = <x, h0> / <h_inf, h0>,
/// where h0 and h_inf are the positive primitive radical vectors vanishing at
/// the source and at the sink. Then r(h0) = d(h_inf) = 1, d(h0) = r(h_inf) = 0.
struct RankDegreeForms {
  CurveData curve;
  GrothendieckData grothendieck;
  DimVector h0, h_inf;
  Vector<Rational> rank_form, degree_form;
  /// Witness modules with their computed slopes.
  std::vector<std::pair<std::string, std::string>> certificate;
};

RankDegreeForms calibrate_forms(const CurveData& curve);

Rational rank_of(const RankDegreeForms& f, const DimVector& x);
Rational degree_of(const RankDegreeForms& f, const DimVector& x);

/// d(x) / r(x) for r(x) > 0, infinity for r(x) = 0 < d(x). Classes with
/// r(x) < 0, or r(x) = 0 > d(x), have the opposite orientation and are
/// rejected; use `trisection` for those.
SlopeValue slope_of(const RankDegreeForms& f, const DimVector& x);

enum class Trisection { P, T, Q };
std::string to_string(Trisection t);

/// Sign of d(x) - w r(x); for w = infinity, the sign of -r(x). This orders
/// every module class, including the preinjective ones of negative rank.
Trisection trisection(const RankDegreeForms& f, const DimVector& x, const SlopeValue& w);

/// Rational slopes: the branch modules and point-set templates of the family
/// curve, which reuses the base weights. Irrational slopes: the Lukas and
/// cotilting symbols of that slope.
struct SlopeClassification {
  SlopeValue slope;
  CurveData family_curve;
  std::vector<BranchModule> branches;
  std::vector<PointSet> templates;
  ModuleExpr irrational;
  std::string note;

  std::size_t pair_count() const { return branches.size() * templates.size(); }
};

SlopeClassification classify_at_slope(const CurveData& curve, const SlopeValue& w);

/// Projectives of slope 0 and injectives of slope infinity, with the weight
/// types of the factor algebras obtained by deleting their vertices.
struct BoundaryData {
  std::vector<int> lambda0_weights, lambda_inf_weights;
  int m = 0;
  int l = 0;
  std::vector<int> zero_slope_projectives, infinite_slope_injectives;
};

BoundaryData boundary_data(const CurveData& curve);

void to_json(nlohmann::json& j, const RankDegreeForms& f);
void to_json(nlohmann::json& j, const BoundaryData& b);

}  // namespace cct
