#pragma once

#include "cct/rep/homological.hpp"
#include "cct/tube/tube.hpp"

#include <map>
#include <memory>

namespace cct {

/// Canonical algebra of a curve together with a representation context.
template <ExactField S>
struct CanonicalContext {
  CanonicalPresentation canonical;
  RepContext<S> ctx;

  const CurveData& curve() const { return canonical.curve; }
};

template <ExactField S>
CanonicalContext<S> canonical_context(const CurveData& curve) {
  auto canonical = build_canonical(curve);
  auto ctx = RepContext<S>::make(canonical.presentation, curve.field);
  return {std::move(canonical), std::move(ctx)};
}

TubePoint tube_point(const CurveData& curve, const std::string& id);

/// Simple regular module number `index` of the tube at `point`. In the tube
/// of arm i, index 0 is the module vanishing on the inner arm vertices and
/// index k > 0 is the simple module at the (p_i - k)-th inner vertex.
template <ExactField S>
Representation<S> simple_regular(const CanonicalContext<S>& cc, const std::string& point, int index);

/// Uniserial tube object, built as iterated nonsplit extensions along its ray.
template <ExactField S>
Representation<S> realize(const CanonicalContext<S>& cc, const TubeObject& x);

std::string tube_tag(const TubeObject& x);

/// Memoizes realized tube objects; `realize` builds (s, l + 1) from (s, l).
template <ExactField S>
class TubeRealizer {
 public:
  explicit TubeRealizer(CanonicalContext<S> cc) : cc_(std::move(cc)) {}
  const CanonicalContext<S>& context() const { return cc_; }
  const Representation<S>& get(const TubeObject& x);

 private:
  CanonicalContext<S> cc_;
  std::map<TubeObject, Representation<S>> cache_;
};

}  // namespace cct
