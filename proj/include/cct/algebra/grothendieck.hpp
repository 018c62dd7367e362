#pragma once

#include "cct/algebra/path_algebra.hpp"

#include <optional>
#include <vector>

namespace cct {

using DimVector = Vector<Integer>;

struct GrothendieckData {
  Matrix<Integer> cartan;
  Matrix<Rational> euler;        // <x, y> = x^T euler y
  Matrix<Rational> coxeter;      // <y, x> = -<x, coxeter y>
  Matrix<Rational> symmetrized;  // euler + euler^T, so q(x) = x^T symmetrized x / 2
  Matrix<Integer> radical_basis;
};

GrothendieckData grothendieck_data(const PathAlgebra& algebra);

Rational euler_form(const GrothendieckData& g, const DimVector& x, const DimVector& y);
Rational quadratic_form(const GrothendieckData& g, const DimVector& x);

/// Exact symmetric LDL test with diagonal pivoting.
bool is_positive_semidefinite(const Matrix<Rational>& symmetric);

ReprType classify_form(const GrothendieckData& g);
ReprType classify_type(const CurveData& curve);

/// det(x I - coxeter), coefficients by increasing degree.
std::vector<Rational> coxeter_polynomial(const GrothendieckData& g);

/// The weight multiset whose canonical algebra has this Coxeter polynomial,
/// searched among multisets with sum(p_i - 1) = n - 2. Nothing when no or
/// several weight lists match.
std::optional<std::vector<int>> weights_from_coxeter_polynomial(const std::vector<Rational>& poly);

DimVector to_dim_vector(const std::vector<Index>& dims);

}  // namespace cct
