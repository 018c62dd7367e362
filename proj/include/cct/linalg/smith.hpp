#pragma once

#include "cct/linalg/matrix.hpp"

namespace cct {

/// Smith normal form: left * input * right = diagonal with d_i | d_{i+1},
/// where left and right are unimodular.
struct SmithForm {
  Matrix<Integer> diagonal;
  Matrix<Integer> left;
  Matrix<Integer> right;
  Index rank = 0;
};

SmithForm smith_normal_form(const Matrix<Integer>& input);

/// Saturated Z-basis of {x in Z^n : m x = 0}, one vector per column.
Matrix<Integer> integer_kernel(const Matrix<Integer>& m);

/// Multiplies a rational matrix by the lcm of its denominators.
Matrix<Integer> clear_denominators(const Matrix<Rational>& m);

}  // namespace cct
