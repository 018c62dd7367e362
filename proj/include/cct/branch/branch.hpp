#pragma once

#include "cct/algebra/curve.hpp"
#include "cct/tube/tube.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cct {

/// Multiplicity-free set of tube objects, kept sorted.
using BranchModule = std::vector<TubeObject>;

BranchModule normalize(BranchModule y);

struct BranchReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Rigidity (no Ext^1 among summands, including self-extensions) and wing
/// filling (a summand of length m has exactly m summands in its wing).
/// Throws `wing_undefined` for a summand whose length reaches the rank.
BranchReport check_branch(const BranchModule& y);
bool is_branch(const BranchModule& y);

/// All branch modules supported on one tube, by choosing disjoint maximal
/// wings and filling each wing recursively.
std::vector<BranchModule> enumerate_tube_branches(const TubePoint& point);

/// Independent check: every subset of objects of length below the rank,
/// filtered by `is_branch`. Exponential; meant for ranks up to 5.
std::vector<BranchModule> exhaustive_tube_branches(const TubePoint& point);

/// Products of per-tube branch sets over the exceptional tubes, optionally
/// restricted to the listed points.
std::vector<BranchModule> enumerate_branches(const CurveData& curve,
                                             const std::optional<std::vector<std::string>>& tubes = {});

BranchModule tau_minus_branch(const BranchModule& y);
/// (x, s, l) -> (x, -(s + l - 1), l): socle and top trade places.
BranchModule dualize_branch(const BranchModule& y);

/// The summands of y lying in the tube of `point`.
BranchModule restrict_to(const BranchModule& y, const std::string& point);

}  // namespace cct
