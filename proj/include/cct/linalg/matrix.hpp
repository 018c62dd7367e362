#pragma once

#include "cct/linalg/scalar.hpp"

#include <Eigen/Core>

#include <vector>

namespace cct {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

/// Kronecker product a ⊗ b.
template <class DerivedA, class DerivedB>
Matrix<typename DerivedA::Scalar> kron(const Eigen::MatrixBase<DerivedA>& a,
                                       const Eigen::MatrixBase<DerivedB>& b) {
  using S = typename DerivedA::Scalar;
  Matrix<S> out = Matrix<S>::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != S(0))
        out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Column-major vectorization of a matrix.
template <class Derived>
Vector<typename Derived::Scalar> vec(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  Vector<S> out(m.rows() * m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) out(j * m.rows() + i) = m(i, j);
  return out;
}

/// Inverse of `vec`.
template <class Derived>
Matrix<typename Derived::Scalar> unvec(const Eigen::MatrixBase<Derived>& v, Index rows,
                                       Index cols) {
  using S = typename Derived::Scalar;
  Matrix<S> out(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) out(i, j) = v(j * rows + i);
  return out;
}

/// Horizontal concatenation of column blocks with equal row counts.
template <class S>
Matrix<S> hstack(const std::vector<Matrix<S>>& blocks, Index rows) {
  Index cols = 0;
  for (const auto& b : blocks) cols += b.cols();
  Matrix<S> out(rows, cols);
  Index at = 0;
  for (const auto& b : blocks) {
    out.middleCols(at, b.cols()) = b;
    at += b.cols();
  }
  return out;
}

/// Block-diagonal matrix.
template <class S>
Matrix<S> block_diagonal(const std::vector<Matrix<S>>& blocks) {
  Index rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix<S> out = Matrix<S>::Zero(rows, cols);
  Index r = 0, c = 0;
  for (const auto& b : blocks) {
    out.block(r, c, b.rows(), b.cols()) = b;
    r += b.rows();
    c += b.cols();
  }
  return out;
}

/// Converts a rational matrix into a field, reducing modulo p where needed.
template <ExactField S>
Matrix<S> to_field(const Matrix<Rational>& m, const FieldSpec& field) {
  Matrix<S> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = field_traits<S>::from(m(i, j), field);
  return out;
}

}  // namespace cct
