#pragma once

#include "cct/classify/module_expr.hpp"
#include "cct/slopes/tubular.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cct {

/// One entry of the list of indecomposable pure-injective modules.
///
/// `family` entries stand for every module of that kind (all Prufer modules
/// of a domestic curve, say); otherwise `point` and `index` name one module,
/// with `index` the socle of a Prufer and the top of an adic module.
struct PureInjectiveDescriptor {
  enum class Kind { FinDimFamily, Prufer, Adic, Generic, IrrationalSpectrum, BoundaryFactorAlgebra, BoundaryExceptional };
  Kind kind = Kind::FinDimFamily;
  std::optional<SlopeValue> slope;
  bool family = false;
  std::string point;
  int index = 0;
  std::string side;       // "0" or "inf" for boundary entries
  std::string component;  // module kind over the boundary factor algebra

  bool operator==(const PureInjectiveDescriptor&) const = default;
};

std::string to_string(PureInjectiveDescriptor::Kind k);

struct ZieglerList {
  std::vector<PureInjectiveDescriptor> items;
  /// Set on irrational slopes: superdecomposable pure-injectives may occur
  /// over a countable field. They are never listed.
  bool superdecomposable_possible = false;
};

/// Domestic curves: the four families. Tubular curves without a filter: the
/// finite-dimensional family and both boundary parts; with a rational filter
/// w in (0, inf): Prufer and adic modules of every known point plus the
/// generic module of slope w; with an irrational filter: one spectrum
/// marker; with w = 0 or inf: that boundary part.
ZieglerList ziegler_list(const CurveData& curve, const std::optional<SlopeValue>& slope = std::nullopt);

struct PiDecomposition {
  ModuleExpr tube_part;
  ModuleExpr divisible_part;
};

/// Splits an expression of slope-w symbols into the part in Prod t_w
/// (finite-dimensional and adic summands) and the part in Add W_w (Prufer
/// and generic summands).
PiDecomposition rational_pi_decomposition(const ModuleExpr& expr, const SlopeValue& w);

void to_json(nlohmann::json& j, const PureInjectiveDescriptor& d);
void to_json(nlohmann::json& j, const ZieglerList& z);

}  // namespace cct
