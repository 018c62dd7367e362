#pragma once

#include "cct/classify/module_expr.hpp"
#include "cct/localization/descriptor.hpp"
#include "cct/tube/tube.hpp"

namespace cct {

/// Throws when a simple names an unknown point or an index outside its tube.
void validate(const CurveData& curve, const SimpleRegularSet& u);

LocalizedRingDescriptor localize(const CurveData& curve, const SimpleRegularSet& u,
                                 bool cofinite_homogeneous = false);

/// Sum of Prufer modules when the removed set is a union of cliques, the
/// empty expression for the identity, a U-filtered marker otherwise.
ModuleExpr quotient_description(const LocalizedRingDescriptor& desc);

/// Localizes further at V, given by simples of the base curve disjoint from
/// the removed set.
LocalizedRingDescriptor compose(const LocalizedRingDescriptor& desc, const SimpleRegularSet& v);

/// The simple of the result curve induced by a surviving simple.
SimpleRegular induced_simple(const LocalizedRingDescriptor& desc, const SimpleRegular& s);

/// The base tube object that becomes simple after localizing: the surviving
/// simple extended by the run of removed simples above it.
TubeObject induced_image(const LocalizedRingDescriptor& desc, const SimpleRegular& s);

/// All simple regulars in the clique of a point.
SimpleRegularSet clique(const CurveData& curve, const std::string& point);

}  // namespace cct
