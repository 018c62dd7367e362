#include "cct/linalg/elimination.hpp"
#include "cct/linalg/smith.hpp"

#include <doctest.h>

#include <random>

using namespace cct;

namespace {

template <class M>
concept HasKernel = requires(const M& m) { kernel_basis(m); };

ModP fp(std::int64_t v) { return ModP(v, 101); }

Matrix<Rational> random_rank_matrix(std::mt19937& rng, Index rows, Index cols, Index r) {
  std::uniform_int_distribution<int> d(-4, 4);
  Matrix<Rational> a(rows, r), b(r, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < r; ++j) a(i, j) = d(rng);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < cols; ++j) b(i, j) = d(rng);
  return a * b;
}

}  // namespace

static_assert(ExactField<Rational>);
static_assert(ExactField<ModP>);
static_assert(!ExactField<Integer>);
static_assert(HasKernel<Matrix<Rational>>);
static_assert(!HasKernel<Matrix<Integer>>);

TEST_CASE("prime field arithmetic") {
  CHECK(fp(100) + fp(5) == fp(4));
  CHECK(fp(3) * fp(3).inverse() == fp(1));
  CHECK(fp(7) - ModP(1) == fp(6));
  CHECK(-fp(1) == fp(100));
  CHECK_THROWS_AS(fp(0).inverse(), Error);
  CHECK_THROWS_AS(ModP(3, 7) + fp(1), Error);
  CHECK(field_traits<ModP>::from(Rational(1, 2), FieldSpec::prime(101)) * fp(2) == fp(1));
  CHECK_THROWS_AS(FieldSpec::prime(100), Error);
  for (int v = 1; v < 101; ++v) CHECK(fp(v) * fp(v).inverse() == fp(1));
}

TEST_CASE("kernel of identity is empty") {
  CHECK(kernel_basis(Matrix<Rational>::Identity(2, 2)).cols() == 0);
  CHECK(rank(Matrix<Rational>::Identity(5, 5)) == 5);
}

TEST_CASE("single relation over F_101") {
  Matrix<ModP> m(1, 2);
  m << fp(1), fp(1);
  const auto k = kernel_basis(m);
  REQUIRE(k.cols() == 1);
  CHECK(k(0, 0) == -k(1, 0));
  CHECK((m * k)(0, 0) == fp(0));
}

TEST_CASE("rank plus nullity on random matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_rank_matrix(rng, 5, 7, 4);
    const auto k = kernel_basis(m);
    CHECK(rank(m) + k.cols() == 7);
    CHECK((m * k).isZero());
    CHECK(rank(k) == k.cols());
    const auto mp = to_field<ModP>(m, FieldSpec::prime(101));
    const auto kp = kernel_basis(mp);
    CHECK(rank(mp) + kp.cols() == 7);
    for (Index i = 0; i < mp.rows(); ++i)
      for (Index j = 0; j < kp.cols(); ++j) CHECK((mp * kp)(i, j) == fp(0));
  }
}

TEST_CASE("solve") {
  Matrix<Rational> a(1, 1), b(1, 1);
  a << 2;
  b << 1;
  const auto x = solve(a, b);
  REQUIRE(x);
  CHECK((*x)(0, 0) == Rational(1, 2));

  Matrix<Rational> s(2, 2), rhs(2, 1);
  s << 1, 1, 1, 1;
  rhs << 1, 2;
  CHECK_FALSE(solve(s, rhs));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const auto m = random_rank_matrix(rng, 4, 6, 3);
    const Matrix<Rational> target = m * random_rank_matrix(rng, 6, 2, 2);
    const auto y = solve(m, target);
    REQUIRE(y);
    CHECK(m * *y == target);
  }
}

TEST_CASE("complement basis spans a complement") {
  Matrix<Rational> span(3, 1);
  span << 1, 1, 0;
  const auto c = complement_basis(span);
  CHECK(c.cols() == 2);
  Matrix<Rational> all(3, 3);
  all << span, c;
  CHECK(rank(all) == 3);
}

TEST_CASE("smith normal form") {
  Matrix<Integer> m(2, 3);
  m << 2, 4, 4, -6, 6, 12;
  const auto s = smith_normal_form(m);
  CHECK(s.left * m * s.right == s.diagonal);
  CHECK(s.rank == 2);
  CHECK(s.diagonal(0, 0) == 2);
  CHECK(s.diagonal(1, 1) == 6);
  // Unimodular: the inverse over the rationals is integral.
  const auto inv = inverse(Matrix<Rational>(s.right.cast<Rational>()));
  REQUIRE(inv);
  for (Index i = 0; i < inv->rows(); ++i)
    for (Index j = 0; j < inv->cols(); ++j) CHECK(boost::multiprecision::denominator((*inv)(i, j)) == 1);
}

TEST_CASE("integer kernel is saturated") {
  // x + 2y + 3z = 0 restricted to even multiples would not be saturated.
  Matrix<Integer> m(1, 3);
  m << 2, 4, 6;
  const auto k = integer_kernel(m);
  REQUIRE(k.cols() == 2);
  CHECK((m * k).isZero());
  // Saturation: the kernel lattice has index 1 in its rational span, so the
  // 2x2 minors of the basis have gcd 1.
  Integer g = 0;
  for (Index i = 0; i < 3; ++i)
    for (Index j = i + 1; j < 3; ++j) g = gcd(g, k(i, 0) * k(j, 1) - k(j, 0) * k(i, 1));
  CHECK(g == 1);
}

TEST_CASE("characteristic polynomial") {
  Matrix<Rational> m(2, 2);
  m << 3, -2, 2, -1;
  const auto p = characteristic_polynomial(m);
  CHECK(p == std::vector<Rational>{1, -2, 1});
}
