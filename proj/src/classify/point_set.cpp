#include "cct/classify/point_set.hpp"

#include <algorithm>

namespace cct {

PointSet PointSet::finite(std::vector<std::string> p) { return normalize({Mode::finite, std::move(p)}); }
PointSet PointSet::cofinite(std::vector<std::string> p) { return normalize({Mode::cofinite, std::move(p)}); }

PointSet normalize(PointSet p) {
  std::sort(p.points.begin(), p.points.end());
  p.points.erase(std::unique(p.points.begin(), p.points.end()), p.points.end());
  if (p.mode == PointSet::Mode::none || p.mode == PointSet::Mode::all) p.points.clear();
  if (p.points.empty() && p.mode == PointSet::Mode::finite) p.mode = PointSet::Mode::none;
  if (p.points.empty() && p.mode == PointSet::Mode::cofinite) p.mode = PointSet::Mode::all;
  return p;
}

void validate(const CurveData& curve, const PointSet& p) {
  for (const auto& id : p.points)
    if (!has_point(curve, id)) throw Error("unknown_point", "point set names unknown point " + id);
}

bool contains(const PointSet& p, const std::string& id) {
  const bool listed = std::find(p.points.begin(), p.points.end(), id) != p.points.end();
  switch (p.mode) {
    case PointSet::Mode::none: return false;
    case PointSet::Mode::finite: return listed;
    case PointSet::Mode::cofinite: return !listed;
    case PointSet::Mode::all: return true;
  }
  return false;
}

bool contains_unsampled(const PointSet& p) {
  return p.mode == PointSet::Mode::cofinite || p.mode == PointSet::Mode::all;
}

bool is_empty(const PointSet& p) { return normalize(p).mode == PointSet::Mode::none; }

std::vector<std::string> members(const CurveData& curve, const PointSet& p) {
  std::vector<std::string> out;
  for (const auto& info : points(curve))
    if (contains(p, info.id)) out.push_back(info.id);
  return out;
}

std::vector<PointSet> point_set_templates(const CurveData& curve) {
  std::vector<std::string> ids;
  for (const auto& info : points(curve)) ids.push_back(info.id);
  const std::size_t n = ids.size();
  if (n >= 20) throw Error("too_many_points", "point-set templates limited to fewer than 20 known points");
  std::vector<PointSet> out;
  for (auto mode : {PointSet::Mode::finite, PointSet::Mode::cofinite})
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      PointSet p{mode, {}};
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) p.points.push_back(ids[i]);
      out.push_back(normalize(std::move(p)));
    }
  return out;
}

namespace {
const char* mode_name(PointSet::Mode m) {
  switch (m) {
    case PointSet::Mode::none: return "none";
    case PointSet::Mode::finite: return "finite";
    case PointSet::Mode::cofinite: return "cofinite";
    case PointSet::Mode::all: return "all";
  }
  return "none";
}
}  // namespace

void to_json(nlohmann::json& j, const PointSet& p) {
  j = {{"mode", mode_name(p.mode)}};
  if (p.mode == PointSet::Mode::finite || p.mode == PointSet::Mode::cofinite) j["points"] = p.points;
}

void from_json(const nlohmann::json& j, PointSet& p) {
  const auto mode = j.at("mode").get<std::string>();
  if (mode == "none") p.mode = PointSet::Mode::none;
  else if (mode == "all") p.mode = PointSet::Mode::all;
  else if (mode == "finite") p.mode = PointSet::Mode::finite;
  else if (mode == "cofinite") p.mode = PointSet::Mode::cofinite;
  else throw Error("bad_point_set", "unknown point-set mode " + mode);
  p.points = j.value("points", std::vector<std::string>{});
  p = normalize(std::move(p));
}

}  // namespace cct
