#include "cct/linalg/elimination.hpp"

namespace cct {

std::vector<Rational> characteristic_polynomial(const Matrix<Rational>& m) {
  const Index n = m.rows();
  std::vector<Rational> coeff(n + 1);
  coeff[n] = 1;
  Matrix<Rational> mk = Matrix<Rational>::Zero(n, n);
  const Matrix<Rational> id = Matrix<Rational>::Identity(n, n);
  for (Index k = 1; k <= n; ++k) {
    mk = m * mk + coeff[n - k + 1] * id;
    coeff[n - k] = -(m * mk).trace() / Rational(k);
  }
  return coeff;
}

}  // namespace cct
