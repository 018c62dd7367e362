#include "cct/linalg/smith.hpp"

#include <utility>

namespace cct {

namespace {

void swap_rows(Matrix<Integer>& m, Index a, Index b) {
  if (a != b) m.row(a).swap(m.row(b));
}
void swap_cols(Matrix<Integer>& m, Index a, Index b) {
  if (a != b) m.col(a).swap(m.col(b));
}

}  // namespace

SmithForm smith_normal_form(const Matrix<Integer>& input) {
  const Index rows = input.rows(), cols = input.cols();
  SmithForm out;
  Matrix<Integer>& d = out.diagonal;
  d = input;
  out.left = Matrix<Integer>::Identity(rows, rows);
  out.right = Matrix<Integer>::Identity(cols, cols);
  Matrix<Integer>& left = out.left;
  Matrix<Integer>& right = out.right;

  Index t = 0;
  for (; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    Index pr = -1, pc = -1;
    for (Index i = t; i < rows; ++i)
      for (Index j = t; j < cols; ++j)
        if (d(i, j) != 0 && (pr < 0 || abs(d(i, j)) < abs(d(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    swap_rows(d, t, pr);
    swap_rows(left, t, pr);
    swap_cols(d, t, pc);
    swap_cols(right, t, pc);

    for (;;) {
      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        const Integer q = d(i, t) / d(t, t);
        d.row(i) -= q * d.row(t);
        left.row(i) -= q * left.row(t);
        if (d(i, t) != 0) {
          swap_rows(d, t, i);
          swap_rows(left, t, i);
          clean = false;
        }
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        const Integer q = d(t, j) / d(t, t);
        d.col(j) -= q * d.col(t);
        right.col(j) -= q * right.col(t);
        if (d(t, j) != 0) {
          swap_cols(d, t, j);
          swap_cols(right, t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: fold any offending entry into the pivot row.
      Index bad = -1;
      for (Index i = t + 1; i < rows && bad < 0; ++i)
        for (Index j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      d.row(t) += d.row(bad);
      left.row(t) += left.row(bad);
    }
    if (d(t, t) < 0) {
      d.row(t) = -d.row(t);
      left.row(t) = -left.row(t);
    }
  }
  out.rank = t;
  return out;
}

Matrix<Integer> integer_kernel(const Matrix<Integer>& m) {
  const SmithForm s = smith_normal_form(m);
  return s.right.rightCols(m.cols() - s.rank);
}

Matrix<Integer> clear_denominators(const Matrix<Rational>& m) {
  Integer l = 1;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) l = lcm(l, boost::multiprecision::denominator(m(i, j)));
  Matrix<Integer> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      out(i, j) = boost::multiprecision::numerator(m(i, j)) * (l / boost::multiprecision::denominator(m(i, j)));
  return out;
}

}  // namespace cct
