#include "cct/rep/tube_modules.hpp"

namespace cct {

TubePoint tube_point(const CurveData& curve, const std::string& id) {
  const auto p = find_point(curve, id);
  return {p.id, p.rank};
}

std::string tube_tag(const TubeObject& x) { return "T" + to_string(x); }

namespace {

// Representation of dimension one at every vertex outside `zero_arm`, with
// the given arm composites placed on the first arrow of each arm.
template <ExactField S>
Representation<S> thin_module(const CanonicalContext<S>& cc, int zero_arm,
                              const std::vector<Rational>& composite) {
  const auto& cp = cc.canonical;
  const auto& pres = cp.presentation;
  Representation<S> m;
  m.dims.assign(pres.vertex_count(), 1);
  if (zero_arm >= 0)
    for (int v : cp.arm_vertices[zero_arm]) m.dims[v] = 0;
  m.maps.resize(pres.arrow_count());
  for (int a = 0; a < pres.arrow_count(); ++a)
    m.maps[a] = Matrix<S>::Zero(m.dims[pres.arrows[a].target], m.dims[pres.arrows[a].source]);
  for (std::size_t i = 0; i < cp.arm_arrows.size(); ++i) {
    if (static_cast<int>(i) == zero_arm) continue;
    const auto& arrows = cp.arm_arrows[i];
    for (std::size_t j = 0; j < arrows.size(); ++j)
      m.maps[arrows[j]](0, 0) = cc.ctx.scalar(j == 0 ? composite[i] : Rational(1));
  }
  return m;
}

}  // namespace

template <ExactField S>
Representation<S> simple_regular(const CanonicalContext<S>& cc, const std::string& point, int index) {
  const CurveData& curve = cc.curve();
  const auto info = find_point(curve, point);
  if (index < 0 || index >= info.rank)
    throw Error("index_out_of_range", "simple regular index " + std::to_string(index) +
                                          " outside the tube of rank " + std::to_string(info.rank));
  const int arms = arm_count(curve);
  Representation<S> m;
  if (!info.exceptional) {
    std::vector<Rational> composite(arms, Rational(1));
    composite[1] = info.mu;
    for (int j = 2; j < arms; ++j) composite[j] = 1 + arm_lambda(curve, j) * info.mu;
    m = thin_module(cc, -1, composite);
  } else if (index == 0) {
    const int i = info.arm;
    std::vector<Rational> composite(arms, Rational(1));
    for (int j = 2; j < arms; ++j) {
      if (i == 0) composite[j] = arm_lambda(curve, j);
      if (i >= 2) composite[j] = arm_lambda(curve, j) - arm_lambda(curve, i);
    }
    if (i >= 2) composite[0] = -arm_lambda(curve, i);
    m = thin_module(cc, i, composite);
  } else {
    const int v = cc.canonical.arm_vertices[info.arm][info.rank - index - 1];
    m = simple_module(cc.ctx, v);
  }
  m.summands = {tube_tag(tube_object({info.id, info.rank}, index, 1))};
  return m;
}

template <ExactField S>
Representation<S> realize(const CanonicalContext<S>& cc, const TubeObject& x) {
  if (tube_point(cc.curve(), x.point.id) != x.point)
    throw Error("unknown_point", "tube object does not belong to this curve");
  Representation<S> m = simple_regular(cc, x.point.id, x.socle);
  for (int k = 1; k < x.length; ++k) {
    const auto top = simple_regular(cc, x.point.id, (x.socle + k) % x.point.rank);
    m = *nonsplit_extension(cc.ctx, top, m, true);
  }
  m.summands = {tube_tag(x)};
  return m;
}

template <ExactField S>
const Representation<S>& TubeRealizer<S>::get(const TubeObject& x) {
  auto it = cache_.find(x);
  if (it != cache_.end()) return it->second;
  Representation<S> m;
  if (x.length == 1) {
    m = simple_regular(cc_, x.point.id, x.socle);
  } else {
    const Representation<S> shorter = get(tube_object(x.point, x.socle, x.length - 1));
    const auto top = get(tube_object(x.point, x.socle + x.length - 1, 1));
    m = *nonsplit_extension(cc_.ctx, top, shorter, true);
  }
  m.summands = {tube_tag(x)};
  return cache_.emplace(x, std::move(m)).first->second;
}

template Representation<Rational> simple_regular(const CanonicalContext<Rational>&, const std::string&, int);
template Representation<ModP> simple_regular(const CanonicalContext<ModP>&, const std::string&, int);
template Representation<Rational> realize(const CanonicalContext<Rational>&, const TubeObject&);
template Representation<ModP> realize(const CanonicalContext<ModP>&, const TubeObject&);
template class TubeRealizer<Rational>;
template class TubeRealizer<ModP>;

}  // namespace cct
