#include "cct/algebra/curve.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

namespace cct {

namespace {

// Parameters compared inside the base field.
Rational in_field(const Rational& q, const FieldSpec& field) {
  if (field.kind == FieldSpec::Kind::rationals) return q;
  return Rational(field_traits<ModP>::from(q, field).value());
}

}  // namespace

std::string to_string(ReprType t) {
  switch (t) {
    case ReprType::Domestic: return "domestic";
    case ReprType::Tubular: return "tubular";
    case ReprType::Wild: return "wild";
  }
  return "?";
}

CurveData make_curve(std::vector<int> weights, FieldSpec field, std::vector<Rational> lambdas,
                     std::vector<std::string> samples) {
  std::sort(weights.begin(), weights.end(), std::greater<>());
  CurveData c{std::move(weights), field, std::move(lambdas), std::move(samples)};
  const int needed = std::max<int>(static_cast<int>(c.weights.size()) - 2, 0);
  if (c.lambdas.empty())
    for (int k = 1; k <= needed; ++k) c.lambdas.emplace_back(k);
  validate(c);
  return c;
}

void validate(const CurveData& c) {
  for (int w : c.weights)
    if (w < 2) throw Error("invalid_curve", "weights must be at least 2");
  if (!std::is_sorted(c.weights.begin(), c.weights.end(), std::greater<>()))
    throw Error("invalid_curve", "weights must be sorted in descending order");
  const std::size_t needed = c.weights.size() > 2 ? c.weights.size() - 2 : 0;
  if (c.lambdas.size() != needed)
    throw Error("invalid_curve", "expected " + std::to_string(needed) + " parameters, got " +
                                     std::to_string(c.lambdas.size()));
  std::set<Rational> seen;
  for (const auto& l : c.lambdas) {
    const Rational v = in_field(l, c.field);
    if (v == 0) throw Error("invalid_curve", "parameter points must be nonzero");
    if (!seen.insert(v).second)
      throw Error("invalid_curve", "parameter points must be pairwise distinct in " +
                                       c.field.to_string());
  }
  std::set<std::string> ids;
  for (std::size_t i = 1; i <= c.weights.size(); ++i) ids.insert("e" + std::to_string(i));
  for (const auto& s : c.homogeneous_samples)
    if (s.empty() || !ids.insert(s).second)
      throw Error("invalid_curve", "duplicate or empty point label '" + s + "'");
  (void)points(c);
}

int k0_rank(const CurveData& c) {
  int r = 2;
  for (int w : c.weights) r += w - 1;
  return r;
}

int arm_count(const CurveData& c) { return std::max<int>(2, static_cast<int>(c.weights.size())); }

int arm_weight(const CurveData& c, int arm) {
  return arm < static_cast<int>(c.weights.size()) ? c.weights[arm] : 1;
}

Rational arm_lambda(const CurveData& c, int arm) {
  if (arm < 2 || arm - 2 >= static_cast<int>(c.lambdas.size()))
    throw Error("invalid_curve", "arm " + std::to_string(arm + 1) + " carries no parameter");
  return c.lambdas[arm - 2];
}

std::vector<PointInfo> exceptional_points(const CurveData& c) {
  std::vector<PointInfo> out;
  for (std::size_t i = 0; i < c.weights.size(); ++i)
    out.push_back({"e" + std::to_string(i + 1), c.weights[i], true, static_cast<int>(i), 0});
  return out;
}

namespace {
std::vector<PointInfo> compute_points(const CurveData& c);
}  // namespace

std::vector<PointInfo> points(const CurveData& c) {
  thread_local CurveData last;
  thread_local std::vector<PointInfo> last_points;
  thread_local bool valid = false;
  if (!valid || !(last == c)) {
    valid = false;
    last_points = compute_points(c);
    last = c;
    valid = true;
  }
  return last_points;
}

namespace {
std::vector<PointInfo> compute_points(const CurveData& c) {
  std::vector<PointInfo> out = exceptional_points(c);
  std::set<Rational> used;
  int candidate = 2;
  for (const auto& label : c.homogeneous_samples) {
    for (;; ++candidate) {
      if (c.field.kind == FieldSpec::Kind::prime && candidate >= static_cast<int>(c.field.p))
        throw Error("invalid_curve", "field too small for the requested homogeneous samples");
      const Rational mu = in_field(candidate, c.field);
      bool ok = mu != 0 && !used.count(mu);
      for (const auto& l : c.lambdas) ok = ok && in_field(1 + l * mu, c.field) != 0;
      if (ok) {
        used.insert(mu);
        out.push_back({label, 1, false, -1, mu});
        ++candidate;
        break;
      }
    }
  }
  return out;
}
}  // namespace

namespace {
std::optional<PointInfo> exceptional_by_name(const CurveData& c, const std::string& id) {
  if (id.size() < 2 || id[0] != 'e' || id[1] == '0') return std::nullopt;
  std::size_t i = 0;
  for (std::size_t k = 1; k < id.size(); ++k) {
    if (id[k] < '0' || id[k] > '9' || k > 4) return std::nullopt;
    i = i * 10 + static_cast<std::size_t>(id[k] - '0');
  }
  if (i > c.weights.size()) return std::nullopt;
  return PointInfo{id, c.weights[i - 1], true, static_cast<int>(i - 1), 0};
}
}  // namespace

PointInfo find_point(const CurveData& c, const std::string& id) {
  if (auto e = exceptional_by_name(c, id)) return *e;
  for (auto& p : points(c))
    if (p.id == id) return p;
  throw Error("unknown_point", "no point '" + id + "' on this curve");
}

bool has_point(const CurveData& c, const std::string& id) {
  if (exceptional_by_name(c, id)) return true;
  for (auto& p : points(c))
    if (p.id == id) return true;
  return false;
}

}  // namespace cct
