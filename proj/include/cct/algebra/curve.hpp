#pragma once

#include "cct/linalg/scalar.hpp"

#include <string>
#include <vector>

namespace cct {

/// Weight data of a weighted projective line together with the parameter
/// points of the arms and a finite sample of homogeneous points.
///
/// `lambdas[k]` belongs to arm k + 3; arms are ordered by descending weight.
/// Exceptional points are named "e1", "e2", ... in arm order.
struct CurveData {
  std::vector<int> weights;
  FieldSpec field;
  std::vector<Rational> lambdas;
  std::vector<std::string> homogeneous_samples;

  bool operator==(const CurveData&) const = default;
};

enum class ReprType { Domestic, Tubular, Wild };

std::string to_string(ReprType t);

/// Sorts the weights, fills default parameters 1, 2, ... and validates.
CurveData make_curve(std::vector<int> weights, FieldSpec field = FieldSpec::rationals(),
                     std::vector<Rational> lambdas = {},
                     std::vector<std::string> samples = {"x1", "x2"});

/// Throws `Error` when an invariant fails.
void validate(const CurveData& curve);

int k0_rank(const CurveData& curve);

/// Number of arms of the canonical quiver (at least two).
int arm_count(const CurveData& curve);

/// Weight of arm i (0-based), 1 for padding arms.
int arm_weight(const CurveData& curve, int arm);

/// Parameter of arm i >= 2 (0-based).
Rational arm_lambda(const CurveData& curve, int arm);

struct PointInfo {
  std::string id;
  int rank = 1;
  bool exceptional = false;
  int arm = -1;     // exceptional points only
  Rational mu = 0;  // homogeneous samples only
};

/// Exceptional points first, then the homogeneous samples.
std::vector<PointInfo> points(const CurveData& curve);
std::vector<PointInfo> exceptional_points(const CurveData& curve);
PointInfo find_point(const CurveData& curve, const std::string& id);
bool has_point(const CurveData& curve, const std::string& id);

}  // namespace cct
