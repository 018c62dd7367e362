#include "cct/localization/localization.hpp"

#include "cct/algebra/grothendieck.hpp"

#include <algorithm>

namespace cct {

void validate(const CurveData& curve, const SimpleRegularSet& u) {
  for (const auto& s : u) {
    const auto p = find_point(curve, s.point);
    if (s.index < 0 || s.index >= p.rank)
      throw Error("index_out_of_range", "simple " + s.point + ":" + std::to_string(s.index) +
                                            " outside the tube of rank " + std::to_string(p.rank));
  }
}

SimpleRegularSet clique(const CurveData& curve, const std::string& point) {
  const auto p = find_point(curve, point);
  SimpleRegularSet out;
  for (int k = 0; k < p.rank; ++k) out.insert({p.id, k});
  return out;
}

LocalizedRingDescriptor localize(const CurveData& curve, const SimpleRegularSet& u,
                                 bool cofinite_homogeneous) {
  validate(curve, u);
  LocalizedRingDescriptor d;
  d.base = curve;
  d.removed = u;
  d.cofinite_homogeneous = cofinite_homogeneous;

  struct Survivor {
    std::string id;
    int rank;
  };
  std::vector<Survivor> exceptional;
  std::vector<std::string> samples;
  for (const auto& p : points(curve)) {
    const int removed = static_cast<int>(
        std::count_if(u.begin(), u.end(), [&](const SimpleRegular& s) { return s.point == p.id; }));
    const int rank = p.rank - removed;
    if (rank == 0) {
      d.removed_points.push_back(p.id);
    } else if (rank >= 2) {
      exceptional.push_back({p.id, rank});
    } else if (p.exceptional) {
      samples.push_back(p.id + "'");
      d.point_map[p.id] = p.id + "'";
    } else {
      samples.push_back(p.id);
      d.point_map[p.id] = p.id;
    }
  }
  std::stable_sort(exceptional.begin(), exceptional.end(),
                   [](const Survivor& a, const Survivor& b) { return a.rank > b.rank; });
  std::vector<int> weights;
  for (std::size_t i = 0; i < exceptional.size(); ++i) {
    weights.push_back(exceptional[i].rank);
    d.point_map[exceptional[i].id] = "e" + std::to_string(i + 1);
  }
  d.result_curve = make_curve(weights, curve.field, {}, samples);
  d.finite_dimensional = d.removed_points.empty() && !cofinite_homogeneous;
  if (d.finite_dimensional) d.result_type = classify_type(d.result_curve);
  return d;
}

ModuleExpr quotient_description(const LocalizedRingDescriptor& d) {
  ModuleExpr e;
  if (d.removed.empty() && !d.cofinite_homogeneous) return e;
  bool cliques_only = true;
  for (const auto& s : d.removed)
    cliques_only = cliques_only &&
                   std::find(d.removed_points.begin(), d.removed_points.end(), s.point) != d.removed_points.end();
  if (!cliques_only) return e.add(sym::UFiltered{d});
  for (const auto& id : d.removed_points) {
    const auto p = find_point(d.base, id);
    for (int k = 0; k < p.rank; ++k) e.add(sym::Prufer{{{p.id, p.rank}, k}});
  }
  if (d.cofinite_homogeneous) e.add(sym::PruferFamily{"unsampled_homogeneous"});
  return e;
}

LocalizedRingDescriptor compose(const LocalizedRingDescriptor& d, const SimpleRegularSet& v) {
  SimpleRegularSet all = d.removed;
  for (const auto& s : v)
    if (!all.insert(s).second)
      throw Error("not_disjoint", "simple " + s.point + ":" + std::to_string(s.index) + " already removed");
  return localize(d.base, all, d.cofinite_homogeneous);
}

namespace {

void require_survivor(const LocalizedRingDescriptor& d, const SimpleRegular& s) {
  validate(d.base, SimpleRegularSet{s});
  if (d.removed.count(s))
    throw Error("simple_in_U", "simple " + s.point + ":" + std::to_string(s.index) + " was localized away");
}

}  // namespace

SimpleRegular induced_simple(const LocalizedRingDescriptor& d, const SimpleRegular& s) {
  require_survivor(d, s);
  int position = 0;
  for (int k = 0; k < s.index; ++k)
    if (!d.removed.count({s.point, k})) ++position;
  return {d.point_map.at(s.point), position};
}

TubeObject induced_image(const LocalizedRingDescriptor& d, const SimpleRegular& s) {
  require_survivor(d, s);
  const auto p = find_point(d.base, s.point);
  int length = 1;
  while (d.removed.count({s.point, (s.index + length) % p.rank})) ++length;
  return tube_object({p.id, p.rank}, s.index, length);
}

}  // namespace cct
