#include "cct/ziegler/ziegler.hpp"

#include <doctest.h>

using namespace cct;
using PI = PureInjectiveDescriptor;

namespace {
std::size_t count(const ZieglerList& z, PI::Kind k) {
  return static_cast<std::size_t>(std::count_if(z.items.begin(), z.items.end(), [&](const PI& d) { return d.kind == k; }));
}
}  // namespace

TEST_CASE("domestic lists are the four families") {
  for (const auto& w : std::vector<std::vector<int>>{{}, {2, 3}, {2, 2, 5}, {2, 3, 5}}) {
    const auto z = ziegler_list(make_curve(w));
    REQUIRE(z.items.size() == 4);
    CHECK(z.items[0].kind == PI::Kind::FinDimFamily);
    CHECK(z.items[1].kind == PI::Kind::Prufer);
    CHECK(z.items[1].family);
    CHECK(z.items[2].kind == PI::Kind::Adic);
    CHECK(z.items[3].kind == PI::Kind::Generic);
    CHECK_FALSE(z.superdecomposable_possible);
  }
  CHECK_THROWS_AS(ziegler_list(make_curve({2, 3, 7})), Error);
  CHECK_THROWS_AS(ziegler_list(make_curve({2, 3}), SlopeValue::rational(1)), Error);
}

TEST_CASE("tubular lists") {
  const auto c = make_curve({2, 3, 6});
  const auto one = ziegler_list(c, SlopeValue::rational(1));
  CHECK(count(one, PI::Kind::Generic) == 1);
  for (const auto& p : points(c)) {
    int prufers = 0, adics = 0;
    for (const auto& d : one.items) {
      if (d.family || d.point != p.id) continue;
      CHECK(d.index >= 0);
      CHECK(d.index < p.rank);
      prufers += d.kind == PI::Kind::Prufer;
      adics += d.kind == PI::Kind::Adic;
    }
    CHECK(prufers == p.rank);
    CHECK(adics == p.rank);
  }
  for (const auto& d : one.items) CHECK(d.slope == SlopeValue::rational(1));

  const auto irr = ziegler_list(c, SlopeValue::sqrt(2));
  REQUIRE(irr.items.size() == 1);
  CHECK(irr.items[0].kind == PI::Kind::IrrationalSpectrum);
  CHECK(irr.superdecomposable_possible);

  const auto all = ziegler_list(c);
  CHECK(count(all, PI::Kind::FinDimFamily) == 1);
  CHECK(count(all, PI::Kind::BoundaryFactorAlgebra) == 6);
  CHECK(count(all, PI::Kind::BoundaryExceptional) == 2);
  CHECK(count(ziegler_list(c, SlopeValue::infinity()), PI::Kind::BoundaryExceptional) == 1);
}

TEST_CASE("pure-injective decomposition") {
  const auto c = make_curve({2, 2, 2, 2});
  const auto w = SlopeValue::rational(1);
  const auto big_w = build_cotilting(c, {}, PointSet::none());
  const auto d1 = rational_pi_decomposition(big_w, w);
  CHECK(d1.tube_part.empty());
  CHECK(d1.divisible_part == big_w);

  const auto c_all = build_cotilting(c, {}, PointSet::all());
  const auto d2 = rational_pi_decomposition(c_all, w);
  CHECK(d2.tube_part.count("adic") == 10);
  CHECK(d2.divisible_part == ModuleExpr{sym::Generic{""}});

  const ModuleExpr single{sym::FinDim{tube_object({"e1", 2}, 0, 1)}};
  const auto d3 = rational_pi_decomposition(single, w);
  CHECK(d3.tube_part == single);
  CHECK(d3.divisible_part.empty());

  CHECK_THROWS_AS(rational_pi_decomposition(ModuleExpr{sym::Generic{"2"}}, w), Error);
  CHECK_THROWS_AS(rational_pi_decomposition(build_tilting(c, {}, PointSet::none()), w), Error);
}

TEST_CASE("descriptor JSON") {
  PI d;
  d.kind = PI::Kind::Prufer;
  d.slope = SlopeValue::rational(1);
  d.point = "e1";
  nlohmann::json j = d;
  CHECK(j.dump() == R"({"kind":"prufer","point":"e1","slope":{"den":"1","kind":"rational","num":"1"},"socle":0})");
}
