#pragma once

#include "cct/classify/tilting.hpp"
#include "cct/rep/tube_modules.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace cct {

struct MembershipResult {
  bool member = true;
  /// The answer relies on a truncated test set rather than an exact criterion.
  bool truncation_certified = false;
  int depth = 0;
  /// Tag of the first test module with nonvanishing Ext^1, if any.
  std::string witness;
};

/// Truncation depth for ray tests: CCT_TRUNCATION_DEPTH when set, else 6.
inline int truncation_depth() {
  if (const char* env = std::getenv("CCT_TRUNCATION_DEPTH")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 6;
}

/// Tube objects whose composition factors all lie in u: the wings of the
/// maximal cyclic runs of u in each tube, or the whole truncated tube when a
/// clique is fully contained in u.
std::vector<TubeObject> extension_closure(const CurveData& curve, const SimpleRegularSet& u, int depth);

/// Membership in the tilting class of the localization at u: Ext^1(S, M) = 0
/// for every S in u.
template <ExactField S>
MembershipResult member_of_localization_class(TubeRealizer<S>& tubes, const Representation<S>& m,
                                              const SimpleRegularSet& u) {
  const auto& cc = tubes.context();
  MembershipResult r;
  for (const auto& s : u) {
    const auto x = tube_object(tube_point(cc.curve(), s.point), s.index, 1);
    if (ext1_dim(cc.ctx, tubes.get(x), m) != 0) {
      r.member = false;
      r.witness = tube_tag(x);
      return r;
    }
  }
  return r;
}

/// Membership in Gen T_(Y,P), tested against preprojectives up to
/// `preprojective_depth` applications of tau^-, the extension closure of
/// U(Y) and the rays of the resolving descriptor up to length `depth`.
/// Homogeneous points outside the samples are not tested.
template <ExactField S>
MembershipResult member_of_tilting_class(TubeRealizer<S>& tubes, const Representation<S>& m,
                                         const BranchModule& y, const PointSet& p,
                                         int depth = truncation_depth(), int preprojective_depth = 2) {
  const auto& cc = tubes.context();
  const auto& ctx = cc.ctx;
  const auto desc = resolving_descriptor(cc.curve(), y, p);
  MembershipResult r;
  r.truncation_certified = true;
  r.depth = depth;
  for (int v = 0; v < ctx.vertex_count(); ++v) {
    auto q = projective_module(ctx, v);
    for (int k = 1; k <= preprojective_depth; ++k) {
      q = tau_inverse(ctx, q);
      if (q.is_zero()) break;
      if (ext1_dim(ctx, q, m) != 0) {
        r.member = false;
        r.witness = "tau^-" + std::to_string(k) + " P(" + std::to_string(v) + ")";
        return r;
      }
    }
  }
  std::vector<TubeObject> tests = extension_closure(cc.curve(), desc.finite_part, depth);
  for (const auto& ray : desc.rays) {
    const auto point = tube_point(cc.curve(), ray.point);
    for (int l = 1; l <= depth; ++l) tests.push_back(tube_object(point, ray.index, l));
  }
  std::sort(tests.begin(), tests.end());
  tests.erase(std::unique(tests.begin(), tests.end()), tests.end());
  for (const auto& x : tests)
    if (ext1_dim(ctx, tubes.get(x), m) != 0) {
      r.member = false;
      r.witness = tube_tag(x);
      return r;
    }
  return r;
}

}  // namespace cct
