#include "cct/ziegler/ziegler.hpp"

namespace cct {

using PI = PureInjectiveDescriptor;

std::string to_string(PI::Kind k) {
  switch (k) {
    case PI::Kind::FinDimFamily: return "findim_family";
    case PI::Kind::Prufer: return "prufer";
    case PI::Kind::Adic: return "adic";
    case PI::Kind::Generic: return "generic";
    case PI::Kind::IrrationalSpectrum: return "irrational_spectrum";
    case PI::Kind::BoundaryFactorAlgebra: return "boundary_factor_algebra";
    case PI::Kind::BoundaryExceptional: return "boundary_exceptional";
  }
  return "?";
}

namespace {

PI entry(PI::Kind kind, std::optional<SlopeValue> slope = std::nullopt, bool family = false) {
  PI d;
  d.kind = kind;
  d.slope = std::move(slope);
  d.family = family;
  return d;
}

void add_boundary(ZieglerList& z, const BoundaryData& b, const std::string& side) {
  const SlopeValue w = side == "0" ? SlopeValue::rational(0) : SlopeValue::infinity();
  for (const char* component : {"prufer", "adic", "generic"}) {
    PI d = entry(PI::Kind::BoundaryFactorAlgebra, w, true);
    d.side = side;
    d.component = component;
    z.items.push_back(d);
  }
  const int count = side == "0" ? b.m : b.l;
  for (int i = 1; i <= count; ++i) {
    PI d = entry(PI::Kind::BoundaryExceptional, w);
    d.side = side;
    d.index = i;
    z.items.push_back(d);
  }
}

}  // namespace

ZieglerList ziegler_list(const CurveData& curve, const std::optional<SlopeValue>& slope) {
  const auto type = classify_type(curve);
  ZieglerList z;
  if (type == ReprType::Wild) throw Error("wild_curve", "no Ziegler list for wild curves");
  if (type == ReprType::Domestic) {
    if (slope) throw Error("not_tubular", "slope filters need a tubular curve");
    z.items.push_back(entry(PI::Kind::FinDimFamily, std::nullopt, true));
    z.items.push_back(entry(PI::Kind::Prufer, std::nullopt, true));
    z.items.push_back(entry(PI::Kind::Adic, std::nullopt, true));
    z.items.push_back(entry(PI::Kind::Generic));
    return z;
  }
  if (!slope) {
    const auto b = boundary_data(curve);
    z.items.push_back(entry(PI::Kind::FinDimFamily, std::nullopt, true));
    add_boundary(z, b, "0");
    add_boundary(z, b, "inf");
    return z;
  }
  const SlopeValue& w = *slope;
  if (w.kind() == SlopeValue::Kind::infinity || (w.is_rational() && w.value() == 0)) {
    add_boundary(z, boundary_data(curve), w.is_rational() ? "0" : "inf");
    return z;
  }
  if (w.is_rational() && w.value() < 0) throw Error("bad_slope", "slopes must be nonnegative");
  if (w.is_irrational()) {
    z.items.push_back(entry(PI::Kind::IrrationalSpectrum, w));
    z.superdecomposable_possible = true;
    return z;
  }
  for (const auto& p : points(curve))
    for (int k = 0; k < p.rank; ++k) {
      PI pr = entry(PI::Kind::Prufer, w);
      pr.point = p.id;
      pr.index = k;
      z.items.push_back(pr);
      PI ad = pr;
      ad.kind = PI::Kind::Adic;
      z.items.push_back(ad);
    }
  z.items.push_back(entry(PI::Kind::Prufer, w, true));
  z.items.push_back(entry(PI::Kind::Adic, w, true));
  z.items.push_back(entry(PI::Kind::Generic, w));
  return z;
}

PiDecomposition rational_pi_decomposition(const ModuleExpr& expr, const SlopeValue& w) {
  if (!w.is_rational() && w.kind() != SlopeValue::Kind::infinity)
    throw Error("bad_slope", "decomposition needs a rational slope");
  PiDecomposition out;
  const std::string tag = w.to_string();
  for (const auto& s : expr.summands()) {
    const auto kind = kind_of(s);
    if (kind == "findim" || kind == "adic" || kind == "adic_family") {
      out.tube_part.add(s);
    } else if (kind == "prufer" || kind == "prufer_family") {
      out.divisible_part.add(s);
    } else if (const auto* g = std::get_if<sym::Generic>(&s)) {
      if (!g->slope.empty() && g->slope != tag)
        throw Error("mixed_slope", "generic module of slope " + g->slope + " in a slope-" + tag + " expression");
      out.divisible_part.add(s);
    } else {
      throw Error("mixed_slope", "summand of kind " + kind + " is not a slope-" + tag + " pure-injective symbol");
    }
  }
  return out;
}

void to_json(nlohmann::json& j, const PureInjectiveDescriptor& d) {
  j = {{"kind", to_string(d.kind)}};
  if (d.slope) j["slope"] = *d.slope;
  if (d.family) j["family"] = true;
  if (d.kind == PI::Kind::Prufer && !d.family) j.update({{"point", d.point}, {"socle", d.index}});
  if (d.kind == PI::Kind::Adic && !d.family) j.update({{"point", d.point}, {"top", d.index}});
  if (d.kind == PI::Kind::BoundaryFactorAlgebra) j.update({{"side", d.side}, {"component", d.component}});
  if (d.kind == PI::Kind::BoundaryExceptional) j.update({{"side", d.side}, {"index", d.index}});
}

void to_json(nlohmann::json& j, const ZieglerList& z) {
  j = {{"items", z.items}, {"superdecomposable_possible", z.superdecomposable_possible}};
}

}  // namespace cct
