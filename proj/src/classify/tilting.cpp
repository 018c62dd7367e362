#include "cct/classify/tilting.hpp"

#include "cct/algebra/grothendieck.hpp"

#include <algorithm>
#include <map>

namespace cct {

SimpleRegularSet regular_support(const BranchModule& y) {
  SimpleRegularSet u;
  for (const auto& x : y) {
    const auto f = reg_comp_factors(x);
    for (int k = 0; k < static_cast<int>(f.size()); ++k)
      if (f[k] > 0) u.insert({x.point.id, k});
  }
  return u;
}

void validate_pair(const CurveData& curve, const BranchModule& y, const PointSet& p) {
  for (const auto& x : y) {
    const auto info = find_point(curve, x.point.id);
    if (!info.exceptional || info.rank != x.point.rank)
      throw Error("not_branch", "summand " + to_string(x) + " does not lie in an exceptional tube of the curve");
  }
  bool ok = false;
  try {
    ok = is_branch(normalize(y)) && normalize(y).size() == y.size();
  } catch (const Error&) {
    ok = false;
  }
  if (!ok) throw Error("not_branch", "Y is not a branch module");
  validate(curve, p);
}

namespace {

void add_prufers(ModuleExpr& e, const CurveData& curve, const BranchModule& y, const std::string& id) {
  const auto info = find_point(curve, id);
  for (int s = 0; s < info.rank; ++s) {
    const Prufer pr{{id, info.rank}, s};
    if (prufer_in_perp(y, pr)) e.add(sym::Prufer{pr});
  }
}

void add_adics(ModuleExpr& e, const CurveData& curve, const BranchModule& y, const std::string& id) {
  const auto info = find_point(curve, id);
  for (int t = 0; t < info.rank; ++t) {
    const Adic a{{id, info.rank}, t};
    if (adic_in_perp_right(y, a)) e.add(sym::Adic{a, true});
  }
}

ModuleExpr findim_part(const BranchModule& y) {
  ModuleExpr e;
  for (const auto& x : y) e.add(sym::FinDim{x});
  return e;
}

}  // namespace

ModuleExpr build_tilting(const CurveData& curve, const BranchModule& y0, const PointSet& p0) {
  const auto y = normalize(y0);
  const auto p = normalize(p0);
  validate_pair(curve, y, p);
  ModuleExpr e = findim_part(y);
  auto u = regular_support(y);
  if (p.mode == PointSet::Mode::none) return e.add(sym::LukasOver{localize(curve, u)});
  for (const auto& id : members(curve, p)) {
    add_prufers(e, curve, y, id);
    const auto c = clique(curve, id);
    u.insert(c.begin(), c.end());
  }
  if (contains_unsampled(p)) e.add(sym::PruferFamily{"unsampled_homogeneous"});
  return e.add(sym::LocalizedRing{localize(curve, u, contains_unsampled(p))});
}

ModuleExpr build_cotilting(const CurveData& curve, const BranchModule& y0, const PointSet& p0) {
  const auto y = normalize(y0);
  const auto p = normalize(p0);
  validate_pair(curve, y, p);
  ModuleExpr e = findim_part(y);
  for (const auto& info : points(curve)) {
    if (contains(p, info.id)) add_adics(e, curve, y, info.id);
    else add_prufers(e, curve, y, info.id);
  }
  if (contains_unsampled(p)) e.add(sym::AdicFamily{"unsampled_homogeneous", true});
  else e.add(sym::PruferFamily{"unsampled_homogeneous"});
  return e.add(sym::Generic{""});
}

ResolvingDescriptor resolving_descriptor(const CurveData& curve, const BranchModule& y0, const PointSet& p0) {
  const auto y = normalize(y0);
  const auto p = normalize(p0);
  validate_pair(curve, y, p);
  ResolvingDescriptor d;
  for (const auto& id : members(curve, p)) {
    const auto info = find_point(curve, id);
    for (int s = 0; s < info.rank; ++s)
      if (prufer_in_perp(y, {{id, info.rank}, s})) d.rays.push_back({id, s});
  }
  d.unsampled_homogeneous_rays = contains_unsampled(p);
  d.finite_part = regular_support(y);
  return d;
}

SerreDescriptor serre_descriptor(const CurveData& curve, const BranchModule& y0, const PointSet& p0) {
  const auto y = normalize(y0);
  const auto p = normalize(p0);
  validate_pair(curve, y, p);
  SerreDescriptor d;
  d.full_tubes = members(curve, p);
  d.unsampled_homogeneous_tubes = contains_unsampled(p);
  std::map<TubePoint, std::vector<bool>> factors;
  for (const auto& x : tau_minus_branch(y)) {
    if (contains(p, x.point.id)) continue;
    auto& f = factors.try_emplace(x.point, std::vector<bool>(x.point.rank, false)).first->second;
    const auto c = reg_comp_factors(x);
    for (int k = 0; k < x.point.rank; ++k) f[k] = f[k] || c[k] > 0;
  }
  // A branch covers fewer than rank simples, so every tube has a gap to start from.
  for (const auto& [point, f] : factors) {
    const int r = point.rank;
    int gap = 0;
    while (f[gap]) ++gap;
    for (int i = 1; i <= r; ++i) {
      const int s = (gap + i) % r;
      if (!f[s] || f[(s + r - 1) % r]) continue;
      int len = 0;
      while (f[(s + len) % r]) ++len;
      d.wings.push_back(tube_object(point, s, len));
    }
  }
  std::sort(d.wings.begin(), d.wings.end());
  return d;
}

std::vector<ClassifiedPair> enumerate_pairs(const CurveData& curve) {
  const auto branches = enumerate_branches(curve);
  const auto templates = point_set_templates(curve);
  std::vector<ClassifiedPair> out;
  out.reserve(branches.size() * templates.size());
  for (const auto& y : branches)
    for (const auto& p : templates) out.push_back({y, p});
  return out;
}

std::vector<ClassifiedPair> classify_all(const CurveData& curve) {
  const auto type = classify_type(curve);
  if (type != ReprType::Domestic)
    throw Error("non_domestic", "classify_all needs a domestic curve, got " + to_string(type) +
                                    (type == ReprType::Tubular ? "; use classify --slope" : ""));
  return enumerate_pairs(curve);
}

bool dual_pattern_matches(const CurveData& curve, const BranchModule& y, const PointSet& p) {
  const auto t = build_tilting(curve, dualize_branch(y), p);
  const auto c = build_cotilting(curve, y, p);
  if (t.count("findim") != c.count("findim")) return false;
  std::set<std::pair<std::string, int>> prufers, adics;
  for (const auto& s : t.summands())
    if (const auto* pr = std::get_if<sym::Prufer>(&s)) {
      const int r = pr->module.point.rank;
      prufers.insert({pr->module.point.id, ((r - pr->module.socle) % r + r) % r});
    }
  for (const auto& s : c.summands())
    if (const auto* a = std::get_if<sym::Adic>(&s)) {
      if (!a->product) return false;
      adics.insert({a->module.point.id, a->module.top});
    }
  const bool families = (t.count("prufer_family") > 0) == (c.count("adic_family") > 0);
  return prufers == adics && families;
}

void to_json(nlohmann::json& j, const ResolvingDescriptor& d) {
  j = nlohmann::json::object();
  j["rays"] = nlohmann::json::array();
  for (const auto& r : d.rays) j["rays"].push_back(r);
  j["unsampled_homogeneous_rays"] = d.unsampled_homogeneous_rays;
  j["finite_part"] = nlohmann::json::array();
  for (const auto& s : d.finite_part) j["finite_part"].push_back(s);
}

void to_json(nlohmann::json& j, const SerreDescriptor& d) {
  j = nlohmann::json::object();
  j["full_tubes"] = d.full_tubes;
  j["unsampled_homogeneous_tubes"] = d.unsampled_homogeneous_tubes;
  j["wings"] = nlohmann::json::array();
  for (const auto& w : d.wings) j["wings"].push_back(w);
}

BranchModule branch_from_json(const CurveData& curve, const nlohmann::json& j) {
  BranchModule y;
  for (const auto& item : j) {
    const auto id = item.at("point").get<std::string>();
    const auto info = find_point(curve, id);
    y.push_back(tube_object({id, info.rank}, item.at("socle").get<int>(), item.value("length", 1)));
  }
  return normalize(y);
}

}  // namespace cct
