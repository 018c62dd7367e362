#pragma once

#include "cct/algebra/curve.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cct {

/// Outcome of one verification sweep. `failures` keeps the first few
/// mismatches in readable form.
struct SweepReport {
  explicit SweepReport(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  std::vector<std::string> failures;
  double seconds = 0;
  nlohmann::json details = nlohmann::json::object();

  bool ok() const { return checked > 0 && mismatches == 0; }
  void fail(std::string what);
};

struct SweepOptions {
  std::uint64_t seed = 1;
  /// Curves to sweep; each sweep has its own default when empty.
  std::vector<CurveData> curves;
  /// Number of sampled pairs for the sampled sweeps.
  std::optional<int> samples;
  int max_length = 6;
  /// Fraction of pairs re-run over the rationals in tube-vs-engine.
  double rational_fraction = 0.1;
  int truncation_depth = 6;
};

/// Symbolic tube Hom/Ext against the representation engine for all pairs of
/// exceptional-tube objects up to `max_length`. Default: (3,3,3) over F_101.
SweepReport verify_tube_vs_engine(const SweepOptions& opt = {});

/// dim Hom(C, tau A) = dim Ext^1(A, C) on sampled pairs with pdim A = 1.
SweepReport verify_ar_formula(const SweepOptions& opt = {});

/// <dim M, dim N> = hom - ext1 + ext2 on sampled pairs.
SweepReport verify_euler(const SweepOptions& opt = {});

/// Branch counts per rank against the exhaustive filter, and rigidity
/// decisions against engine Ext^1 on (3,3,3).
SweepReport verify_branch_counts(const SweepOptions& opt = {});

/// (Y, P) -> summand multiset is injective on (3,3,3) with finite P.
SweepReport verify_injectivity(const SweepOptions& opt = {});

/// Finite-dimensional summands of every T_(Y,P) on (2,3,6) stay within
/// sum(p_i - 1).
SweepReport verify_summand_bound(const SweepOptions& opt = {});

/// Composition, weight reduction, clique quotients and the type of tubular
/// localizations.
SweepReport verify_localization_laws(const SweepOptions& opt = {});

/// Prufer and adic perpendicularity rules against truncated engine Ext on
/// tubes of rank at most 3.
SweepReport verify_prufer_adic_rules(const SweepOptions& opt = {});

/// Names accepted by `run_sweep`.
std::vector<std::string> sweep_names();
SweepReport run_sweep(const std::string& name, const SweepOptions& opt = {});

void to_json(nlohmann::json& j, const SweepReport& r);

}  // namespace cct
