#include "cct/localization/localization.hpp"
#include "cct/rep/tube_modules.hpp"

#include <doctest.h>

using namespace cct;

TEST_CASE("single simple in a rank three tube") {
  const auto c = make_curve({3, 3, 3});
  const auto d = localize(c, {{"e1", 0}});
  CHECK(d.result_curve.weights == std::vector<int>{3, 3, 2});
  CHECK(d.finite_dimensional);
  REQUIRE(d.result_type);
  CHECK(*d.result_type == ReprType::Domestic);
  CHECK(d.point_map.at("e1") == "e3");
  CHECK(d.point_map.at("e2") == "e1");
  const auto q = quotient_description(d);
  CHECK(q.size() == 1);
  CHECK(q.count("u_filtered") == 1);
}

TEST_CASE("identity localization") {
  for (const auto& w : std::vector<std::vector<int>>{{}, {2, 3, 6}, {2, 2, 2, 2}}) {
    const auto c = make_curve(w);
    const auto d = localize(c, {});
    CHECK(d.result_curve == c);
    CHECK(d.finite_dimensional);
    CHECK(quotient_description(d).empty());
  }
}

TEST_CASE("removing full cliques") {
  const auto c = make_curve({2, 2, 2, 2});
  const auto d = localize(c, clique(c, "e2"));
  CHECK_FALSE(d.finite_dimensional);
  CHECK(d.removed_points == std::vector<std::string>{"e2"});
  CHECK(d.result_curve.weights == std::vector<int>{2, 2, 2});
  const auto q = quotient_description(d);
  CHECK(q == ModuleExpr{sym::Prufer{{{"e2", 2}, 0}}, sym::Prufer{{{"e2", 2}, 1}}});

  const auto h = localize(c, clique(c, "x1"));
  CHECK(quotient_description(h) == ModuleExpr{sym::Prufer{{{"x1", 1}, 0}}});
  CHECK(h.result_curve.homogeneous_samples == std::vector<std::string>{"x2"});
}

TEST_CASE("compose equals localizing at the union") {
  const auto c = make_curve({3, 3, 3});
  const auto once = compose(localize(c, {{"e1", 0}}), {{"e1", 1}});
  CHECK(once == localize(c, {{"e1", 0}, {"e1", 1}}));
  CHECK(once.result_curve.weights == std::vector<int>{3, 3});
  CHECK(once.result_curve.homogeneous_samples == std::vector<std::string>{"e1'", "x1", "x2"});
  CHECK(compose(localize(c, {{"e1", 0}}), {}) == localize(c, {{"e1", 0}}));
  CHECK_THROWS_AS(compose(localize(c, {{"e1", 0}}), {{"e1", 0}}), Error);
}

TEST_CASE("induced simples preserve cyclic order") {
  const auto c = make_curve({4, 2}, FieldSpec::prime(101));
  const auto d = localize(c, {{"e1", 2}});
  CHECK(induced_simple(d, {"e1", 0}) == SimpleRegular{"e1", 0});
  CHECK(induced_simple(d, {"e1", 1}) == SimpleRegular{"e1", 1});
  CHECK(induced_simple(d, {"e1", 3}) == SimpleRegular{"e1", 2});
  CHECK_THROWS_AS(induced_simple(d, {"e1", 2}), Error);
  CHECK(induced_image(d, {"e1", 1}).length == 2);

  // The images form a tube of rank 3: Ext^1 runs from index k to index k - 1.
  const auto cc = canonical_context<ModP>(c);
  std::vector<Representation<ModP>> images;
  for (int k : {0, 1, 3}) images.push_back(realize(cc, induced_image(d, {"e1", k})));
  const auto u = simple_regular(cc, "e1", 2);
  for (std::size_t i = 0; i < images.size(); ++i) {
    CHECK(hom_dim(cc.ctx, u, images[i]) == 0);
    CHECK(ext1_dim(cc.ctx, u, images[i]) == 0);
    for (std::size_t j = 0; j < images.size(); ++j)
      CHECK(ext1_dim(cc.ctx, images[i], images[j]) == ((i + 2) % 3 == j ? 1 : 0));
  }
}

TEST_CASE("single simple localizations of tubular curves stay tame") {
  for (const auto& w : std::vector<std::vector<int>>{{2, 2, 2, 2}, {3, 3, 3}, {4, 4, 2}, {6, 3, 2}}) {
    const auto c = make_curve(w);
    for (const auto& p : exceptional_points(c))
      for (int k = 0; k < p.rank; ++k) {
        const auto d = localize(c, {{p.id, k}});
        REQUIRE(d.result_type);
        CHECK(*d.result_type != ReprType::Wild);
      }
  }
}
