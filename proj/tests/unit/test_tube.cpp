#include "cct/linalg/scalar.hpp"
#include "cct/tube/tube.hpp"

#include <doctest.h>

#include <random>

using namespace cct;

namespace {

const TubePoint r1{"x1", 1};
const TubePoint r2{"e2", 2};
const TubePoint r3{"e1", 3};
const TubePoint r4{"e1", 4};

TubeObject obj(const TubePoint& p, int s, int l) { return tube_object(p, s, l); }

}  // namespace

TEST_CASE("tau") {
  CHECK(tau(obj(r1, 0, 3)) == obj(r1, 0, 3));
  CHECK(tau(obj(r3, 0, 2)) == obj(r3, 2, 2));
  for (int s = 0; s < 3; ++s)
    for (int l = 1; l < 7; ++l) {
      TubeObject x = obj(r3, s, l);
      CHECK(tau(tau(tau(x))) == x);
      CHECK(tau_inverse(tau(x)) == x);
    }
}

TEST_CASE("regular composition factors") {
  CHECK(reg_comp_factors(obj(r3, 0, 1)) == std::vector<int>{1, 0, 0});
  CHECK(reg_comp_factors(obj(r3, 0, 2)) == std::vector<int>{1, 1, 0});
  CHECK(reg_comp_factors(obj(r3, 0, 5)) == std::vector<int>{2, 2, 1});
  for (int s = 0; s < 3; ++s)
    for (int l = 1; l < 7; ++l) {
      const auto x = obj(r3, s, l);
      const auto f = reg_comp_factors(x);
      const auto g = reg_comp_factors(tau(x));
      for (int i = 0; i < 3; ++i) CHECK(g[(i + 2) % 3] == f[i]);
    }
}

TEST_CASE("hom and ext in a tube") {
  CHECK(hom_dim(obj(r2, 0, 1), obj(r2, 0, 1)) == 1);
  CHECK(hom_dim(obj(r3, 0, 1), obj(r3, 0, 1)) == 1);
  CHECK(hom_dim(obj(r3, 0, 2), obj(r3, 0, 1)) == 0);
  CHECK(hom_dim(obj(r3, 0, 2), obj(r3, 1, 1)) == 1);
  CHECK(ext1_dim(obj(r3, 0, 1), obj(r3, 2, 1)) == 1);
  CHECK(ext1_dim(obj(r3, 0, 1), obj(r3, 1, 1)) == 0);
  CHECK(ext1_dim(obj(r1, 0, 1), obj(r1, 0, 1)) == 1);
  CHECK(hom_dim(obj(r1, 0, 2), obj(r1, 0, 3)) == 2);
  CHECK(hom_dim(obj(r3, 0, 1), obj(r2, 0, 1)) == 0);

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> s(0, 3), l(1, 8);
  for (int k = 0; k < 1000; ++k) {
    const auto a = obj(r4, s(rng), l(rng));
    const auto b = obj(r4, s(rng), l(rng));
    CHECK(ext1_dim(a, b) == hom_dim(b, tau(a)));
  }
}

TEST_CASE("wings") {
  CHECK(wing(obj(r3, 1, 1)) == std::vector<TubeObject>{obj(r3, 1, 1)});
  auto w = wing(obj(r3, 0, 2));
  CHECK(w == std::vector<TubeObject>{obj(r3, 0, 1), obj(r3, 0, 2), obj(r3, 1, 1)});
  CHECK(wing(obj(r4, 0, 3)).size() == 6);
  CHECK_THROWS_AS(wing(obj(r3, 0, 3)), Error);
  for (const auto& x : wing(obj(r4, 2, 3))) CHECK(in_wing(x, obj(r4, 2, 3)));
  CHECK_FALSE(in_wing(obj(r4, 1, 1), obj(r4, 2, 3)));
}

TEST_CASE("prufer and adic rules") {
  CHECK(prufer_in_perp({}, {r2, 0}));
  CHECK(prufer_in_perp({}, {r2, 1}));
  CHECK(prufer_in_perp({obj(r2, 0, 1)}, {r2, 0}));
  CHECK_FALSE(prufer_in_perp({obj(r2, 0, 1)}, {r2, 1}));
  const std::vector<TubeObject> y{obj(r3, 0, 2), obj(r3, 0, 1)};
  CHECK(prufer_in_perp(y, {r3, 0}));
  CHECK_FALSE(prufer_in_perp(y, {r3, 1}));
  CHECK_FALSE(prufer_in_perp(y, {r3, 2}));
  CHECK(adic_in_perp_right({obj(r2, 0, 1)}, {r2, 0}));
  CHECK_FALSE(adic_in_perp_right({obj(r2, 0, 1)}, {r2, 1}));

  CHECK_FALSE(prufer_adic_ext_vanishes({r1, 0}, {r1, 0}));
  CHECK(prufer_adic_ext_vanishes({r1, 0}, {r2, 0}));
  CHECK_FALSE(prufer_adic_ext_vanishes({r3, 0}, {r3, 2}));
}
