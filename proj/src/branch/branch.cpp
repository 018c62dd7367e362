#include "cct/branch/branch.hpp"

#include "cct/linalg/scalar.hpp"

#include <algorithm>
#include <functional>

namespace cct {

BranchModule normalize(BranchModule y) {
  std::sort(y.begin(), y.end());
  return y;
}

BranchReport check_branch(const BranchModule& y) {
  BranchReport r;
  for (const auto& x : y)
    if (x.length >= x.point.rank)
      throw Error("wing_undefined", "summand " + to_string(x) + " has length at least the rank");
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = i + 1; j < y.size(); ++j)
      if (y[i] == y[j]) r.violations.push_back("duplicate summand " + to_string(y[i]));
  for (const auto& a : y)
    for (const auto& b : y)
      if (ext1_dim(a, b) != 0)
        r.violations.push_back("B1: Ext^1(" + to_string(a) + ", " + to_string(b) + ") != 0");
  for (const auto& v : y) {
    const auto inside = std::count_if(y.begin(), y.end(), [&](const TubeObject& x) { return in_wing(x, v); });
    if (inside != v.length)
      r.violations.push_back("B2: wing of " + to_string(v) + " holds " + std::to_string(inside) +
                             " summands, needs " + std::to_string(v.length));
  }
  r.ok = r.violations.empty();
  return r;
}

bool is_branch(const BranchModule& y) {
  for (const auto& x : y)
    if (x.length >= x.point.rank)
      throw Error("wing_undefined", "summand " + to_string(x) + " has length at least the rank");
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (i < j && y[i] == y[j]) return false;
      if (ext1_dim(y[i], y[j]) != 0) return false;
    }
  for (const auto& v : y)
    if (std::count_if(y.begin(), y.end(), [&](const TubeObject& x) { return in_wing(x, v); }) != v.length)
      return false;
  return true;
}

namespace {

// Fillings of the wing with vertex (s, m) that contain the vertex.
std::vector<BranchModule> fillings(const TubePoint& p, int s, int m) {
  if (m == 0) return {{}};
  std::vector<BranchModule> out;
  const TubeObject vertex = tube_object(p, s, m);
  for (int k = 1; k <= m; ++k)
    for (const auto& left : fillings(p, s, k - 1))
      for (const auto& right : fillings(p, s + k, m - k)) {
        BranchModule y{vertex};
        y.insert(y.end(), left.begin(), left.end());
        y.insert(y.end(), right.begin(), right.end());
        out.push_back(normalize(std::move(y)));
      }
  return out;
}

}  // namespace

std::vector<BranchModule> enumerate_tube_branches(const TubePoint& p) {
  const int r = p.rank;
  std::vector<BranchModule> out;
  // Maximal vertices occupy pairwise disjoint cyclic intervals of simples.
  std::vector<bool> used(r, false);
  std::vector<std::pair<int, int>> chosen;
  std::function<void(int)> pick = [&](int from) {
    // Expand the current choice of maximal vertices into all fillings.
    std::vector<BranchModule> partial{{}};
    for (auto [s, m] : chosen) {
      std::vector<BranchModule> next;
      for (const auto& base : partial)
        for (const auto& f : fillings(p, s, m)) {
          BranchModule y = base;
          y.insert(y.end(), f.begin(), f.end());
          next.push_back(std::move(y));
        }
      partial = std::move(next);
    }
    for (auto& y : partial) {
      y = normalize(std::move(y));
      if (is_branch(y)) out.push_back(std::move(y));
    }
    for (int s = from; s < r; ++s)
      for (int m = 1; m < r; ++m) {
        bool free = true;
        for (int i = 0; i < m; ++i) free = free && !used[(s + i) % r];
        if (!free) continue;
        for (int i = 0; i < m; ++i) used[(s + i) % r] = true;
        chosen.emplace_back(s, m);
        pick(s + 1);
        chosen.pop_back();
        for (int i = 0; i < m; ++i) used[(s + i) % r] = false;
      }
  };
  pick(0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<BranchModule> exhaustive_tube_branches(const TubePoint& p) {
  std::vector<TubeObject> candidates;
  for (int s = 0; s < p.rank; ++s)
    for (int l = 1; l < p.rank; ++l) candidates.push_back(tube_object(p, s, l));
  if (candidates.size() > 24) throw Error("too_large", "exhaustive search limited to rank 5");
  std::vector<BranchModule> out;
  const std::uint64_t total = std::uint64_t{1} << candidates.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    BranchModule y;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (mask >> i & 1) y.push_back(candidates[i]);
    if (is_branch(y)) out.push_back(normalize(std::move(y)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BranchModule> enumerate_branches(const CurveData& curve,
                                             const std::optional<std::vector<std::string>>& tubes) {
  std::vector<BranchModule> out{{}};
  for (const auto& p : exceptional_points(curve)) {
    if (tubes && std::find(tubes->begin(), tubes->end(), p.id) == tubes->end()) continue;
    const auto per_tube = enumerate_tube_branches({p.id, p.rank});
    std::vector<BranchModule> next;
    for (const auto& base : out)
      for (const auto& y : per_tube) {
        BranchModule z = base;
        z.insert(z.end(), y.begin(), y.end());
        next.push_back(normalize(std::move(z)));
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

BranchModule tau_minus_branch(const BranchModule& y) {
  BranchModule out;
  for (const auto& x : y) out.push_back(tau_inverse(x));
  return normalize(std::move(out));
}

BranchModule dualize_branch(const BranchModule& y) {
  BranchModule out;
  for (const auto& x : y) out.push_back(tube_object(x.point, -(x.socle + x.length - 1), x.length));
  return normalize(std::move(out));
}

BranchModule restrict_to(const BranchModule& y, const std::string& point) {
  BranchModule out;
  for (const auto& x : y)
    if (x.point.id == point) out.push_back(x);
  return out;
}

}  // namespace cct
