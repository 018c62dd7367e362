#include "cct/tube/tube.hpp"

#include "cct/linalg/scalar.hpp"

#include <algorithm>

namespace cct {

namespace {

int mod(int a, int r) {
  const int m = a % r;
  return m < 0 ? m + r : m;
}

}  // namespace

int TubeObject::top() const { return mod(socle + length - 1, point.rank); }

TubeObject tube_object(const TubePoint& point, int socle, int length) {
  if (point.rank < 1) throw Error("invalid_tube", "tube rank must be positive");
  if (length < 1) throw Error("invalid_tube", "regular length must be positive");
  return {point, mod(socle, point.rank), length};
}

TubeObject tau(const TubeObject& x) { return tube_object(x.point, x.socle - 1, x.length); }
TubeObject tau_inverse(const TubeObject& x) { return tube_object(x.point, x.socle + 1, x.length); }

std::vector<int> reg_comp_factors(const TubeObject& x) {
  std::vector<int> counts(x.point.rank, 0);
  for (int k = 0; k < x.length; ++k) ++counts[mod(x.socle + k, x.point.rank)];
  return counts;
}

bool has_comp_factor(const TubeObject& x, int index) {
  return x.length >= x.point.rank || mod(index - x.socle, x.point.rank) < x.length;
}

int hom_dim(const TubeObject& a, const TubeObject& b) {
  if (a.point != b.point) return 0;
  const int r = a.point.rank;
  int count = 0;
  for (int j = 1; j <= std::min(a.length, b.length); ++j)
    if (mod(a.socle + a.length - j - b.socle, r) == 0) ++count;
  return count;
}

int ext1_dim(const TubeObject& a, const TubeObject& b) { return hom_dim(b, tau(a)); }

std::vector<TubeObject> wing(const TubeObject& vertex) {
  if (vertex.length >= vertex.point.rank)
    throw Error("wing_undefined", "wing needs regular length below the rank, got " + to_string(vertex));
  std::vector<TubeObject> out;
  for (int l = 1; l <= vertex.length; ++l)
    for (int i = 0; i + l <= vertex.length; ++i)
      out.push_back(tube_object(vertex.point, vertex.socle + i, l));
  std::sort(out.begin(), out.end());
  return out;
}

bool in_wing(const TubeObject& x, const TubeObject& vertex) {
  if (x.point != vertex.point) return false;
  const int i = mod(x.socle - vertex.socle, vertex.point.rank);
  return i + x.length <= vertex.length;
}

bool prufer_in_perp(const std::vector<TubeObject>& y, const Prufer& p) {
  for (const auto& x : y)
    if (x.point == p.point && has_comp_factor(tau_inverse(x), p.socle)) return false;
  return true;
}

bool adic_in_perp_right(const std::vector<TubeObject>& y, const Adic& a) {
  for (const auto& x : y)
    if (x.point == a.point && has_comp_factor(tau(x), a.top)) return false;
  return true;
}

bool prufer_adic_ext_vanishes(const Prufer& p, const Adic& a) { return p.point.id != a.point.id; }

std::string to_string(const TubeObject& x) {
  return "(" + x.point.id + "," + std::to_string(x.socle) + "," + std::to_string(x.length) + ")";
}

}  // namespace cct
