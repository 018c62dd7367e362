#include "cct/classify/membership.hpp"

#include <algorithm>
#include <map>

namespace cct {

std::vector<TubeObject> extension_closure(const CurveData& curve, const SimpleRegularSet& u, int depth) {
  std::map<std::string, std::vector<bool>> by_point;
  for (const auto& s : u) {
    const auto info = find_point(curve, s.point);
    by_point.try_emplace(s.point, std::vector<bool>(info.rank, false)).first->second[s.index] = true;
  }
  std::vector<TubeObject> out;
  for (const auto& [id, f] : by_point) {
    const int r = static_cast<int>(f.size());
    const TubePoint point{id, r};
    if (std::find(f.begin(), f.end(), false) == f.end()) {
      for (int s = 0; s < r; ++s)
        for (int l = 1; l <= depth; ++l) out.push_back(tube_object(point, s, l));
      continue;
    }
    for (int s = 0; s < r; ++s) {
      if (!f[s] || f[(s + r - 1) % r]) continue;
      int len = 0;
      while (f[(s + len) % r]) ++len;
      for (int a = 0; a < len; ++a)
        for (int l = 1; a + l <= len; ++l) out.push_back(tube_object(point, s + a, l));
    }
  }
  return out;
}

}  // namespace cct
