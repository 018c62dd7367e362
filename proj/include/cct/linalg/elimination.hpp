#pragma once

#include "cct/linalg/matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace cct {

/// Reduced row echelon form together with its pivot columns.
template <ExactField S>
struct Echelon {
  Matrix<S> reduced;
  std::vector<Index> pivots;

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <class Derived>
  requires ExactField<typename Derived::Scalar>
Echelon<typename Derived::Scalar> row_echelon(const Eigen::MatrixBase<Derived>& input) {
  using S = typename Derived::Scalar;
  using FT = field_traits<S>;
  Echelon<S> out{input, {}};
  Matrix<S>& m = out.reduced;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = -1;
    for (Index r = row; r < m.rows(); ++r)
      if (!FT::is_zero(m(r, col))) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const S inv = FT::inverse(m(row, col));
    for (Index c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || FT::is_zero(m(r, col))) continue;
      const S factor = m(r, col);
      for (Index c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <class Derived>
  requires ExactField<typename Derived::Scalar>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return row_echelon(m).rank();
}

/// Basis of the right null space, one vector per column.
template <class Derived>
  requires ExactField<typename Derived::Scalar>
Matrix<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  const auto ech = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (Index p : ech.pivots) is_pivot[p] = true;
  Matrix<S> basis = Matrix<S>::Zero(m.cols(), m.cols() - ech.rank());
  Index k = 0;
  for (Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = S(1);
    for (Index r = 0; r < ech.rank(); ++r) basis(ech.pivots[r], k) = -ech.reduced(r, free);
    ++k;
  }
  return basis;
}

/// Some x with m·x = b, or nothing when the system is inconsistent.
template <class DerivedM, class DerivedB>
  requires ExactField<typename DerivedM::Scalar>
std::optional<Matrix<typename DerivedM::Scalar>> solve(const Eigen::MatrixBase<DerivedM>& m,
                                                       const Eigen::MatrixBase<DerivedB>& b) {
  using S = typename DerivedM::Scalar;
  Matrix<S> augmented(m.rows(), m.cols() + b.cols());
  augmented << m, b;
  const auto ech = row_echelon(augmented);
  for (Index p : ech.pivots)
    if (p >= m.cols()) return std::nullopt;
  Matrix<S> x = Matrix<S>::Zero(m.cols(), b.cols());
  for (Index r = 0; r < ech.rank(); ++r)
    x.row(ech.pivots[r]) = ech.reduced.block(r, m.cols(), 1, b.cols());
  return x;
}

/// Columns of `m` at the pivot positions: a basis of its column space.
template <class Derived>
  requires ExactField<typename Derived::Scalar>
Matrix<typename Derived::Scalar> column_space_basis(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  const auto ech = row_echelon(m);
  Matrix<S> out(m.rows(), ech.rank());
  for (Index k = 0; k < ech.rank(); ++k) out.col(k) = m.col(ech.pivots[k]);
  return out;
}

/// Standard basis vectors that extend the column space of `span` to the whole
/// ambient space, in increasing coordinate order.
template <class Derived>
  requires ExactField<typename Derived::Scalar>
Matrix<typename Derived::Scalar> complement_basis(const Eigen::MatrixBase<Derived>& span) {
  using S = typename Derived::Scalar;
  const Index n = span.rows();
  Matrix<S> joined(n, span.cols() + n);
  joined << span, Matrix<S>::Identity(n, n);
  const auto ech = row_echelon(joined);
  std::vector<Index> extra;
  for (Index p : ech.pivots)
    if (p >= span.cols()) extra.push_back(p - span.cols());
  Matrix<S> out = Matrix<S>::Zero(n, static_cast<Index>(extra.size()));
  for (std::size_t k = 0; k < extra.size(); ++k) out(extra[k], static_cast<Index>(k)) = S(1);
  return out;
}

template <class Derived>
  requires ExactField<typename Derived::Scalar>
std::optional<Matrix<typename Derived::Scalar>> inverse(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  if (m.rows() != m.cols()) return std::nullopt;
  return solve(m, Matrix<S>::Identity(m.rows(), m.rows()));
}

/// Characteristic polynomial det(xI - m), coefficients in increasing degree.
/// Faddeev-LeVerrier; valid over the rationals.
std::vector<Rational> characteristic_polynomial(const Matrix<Rational>& m);

}  // namespace cct
