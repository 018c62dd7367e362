#include "cct/algebra/grothendieck.hpp"
#include "cct/classify/membership.hpp"

#include <doctest.h>

#include <set>

using namespace cct;

namespace {
TubeObject obj(const CurveData& c, const std::string& id, int s, int l) {
  return tube_object({id, find_point(c, id).rank}, s, l);
}
}  // namespace

TEST_CASE("point sets normalize and enumerate") {
  CHECK(PointSet::finite({}) == PointSet::none());
  CHECK(PointSet::cofinite({}) == PointSet::all());
  CHECK(PointSet::finite({"b", "a", "b"}).points == std::vector<std::string>{"a", "b"});
  const auto c = make_curve({});
  CHECK(point_set_templates(c).size() == 8);
  CHECK_THROWS_AS(validate(c, PointSet::finite({"e1"})), Error);
  const auto p = PointSet::cofinite({"x1"});
  CHECK(members(c, p) == std::vector<std::string>{"x2"});
  nlohmann::json j = p;
  CHECK(j.get<PointSet>() == p);
}

TEST_CASE("tilting expressions for the anchored pairs") {
  SUBCASE("empty pair gives the Lukas module") {
    const auto c = make_curve({2, 3});
    const auto t = build_tilting(c, {}, PointSet::none());
    REQUIRE(t.size() == 1);
    const auto* l = std::get_if<sym::LukasOver>(&t.summands()[0]);
    REQUIRE(l);
    CHECK(l->desc.removed.empty());
    CHECK(l->desc.result_curve == c);
  }
  SUBCASE("one homogeneous point") {
    const auto c = make_curve({2, 3});
    const auto t = build_tilting(c, {}, PointSet::finite({"x1"}));
    CHECK(t.size() == 2);
    CHECK(t.count("prufer") == 1);
    CHECK(t.count("localized_ring") == 1);
    const sym::LocalizedRing* r = nullptr;
    for (const auto& s : t.summands())
      if (const auto* q = std::get_if<sym::LocalizedRing>(&s)) r = q;
    REQUIRE(r);
    CHECK(r->desc.removed == clique(c, "x1"));
    CHECK(quotient_description(r->desc) == ModuleExpr{sym::Prufer{{{"x1", 1}, 0}}});
  }
  SUBCASE("simple in a rank two tube") {
    const auto c = make_curve({2, 2, 2});
    const BranchModule y{obj(c, "e1", 0, 1)};
    const auto t = build_tilting(c, y, PointSet::finite({"e1"}));
    const ModuleExpr expected{sym::FinDim{y[0]}, sym::Prufer{{{"e1", 2}, 0}},
                              sym::LocalizedRing{localize(c, clique(c, "e1"))}};
    CHECK(t == expected);
  }
}

TEST_CASE("cotilting expressions") {
  const auto c = make_curve({2, 2, 2});
  SUBCASE("W") {
    const auto w = build_cotilting(c, {}, PointSet::none());
    CHECK(w.count("prufer") == 2 + 2 + 2 + 1 + 1);
    CHECK(w.count("prufer_family") == 1);
    CHECK(w.count("generic") == 1);
    CHECK(w.count("adic") == 0);
  }
  SUBCASE("all adics") {
    const auto w = build_cotilting(c, {}, PointSet::all());
    CHECK(w.count("adic") == 8);
    CHECK(w.count("adic_family") == 1);
    CHECK(w.count("prufer") + w.count("prufer_family") == 0);
    for (const auto& s : w.summands())
      if (const auto* a = std::get_if<sym::Adic>(&s)) CHECK(a->product);
  }
  SUBCASE("simple in a rank two tube") {
    const BranchModule y{obj(c, "e1", 0, 1)};
    const auto w = build_cotilting(c, y, PointSet::none());
    CHECK(w.count("findim") == 1);
    CHECK(w.count("prufer") == 1 + 2 + 2 + 1 + 1);
    for (const auto& s : w.summands())
      if (const auto* p = std::get_if<sym::Prufer>(&s))
        if (p->module.point.id == "e1") CHECK(p->module.socle == 0);
  }
}

TEST_CASE("pair validation") {
  const auto c = make_curve({3, 3, 3});
  CHECK_THROWS_AS(build_tilting(c, {obj(c, "e1", 0, 1), obj(c, "e1", 1, 1)}, PointSet::none()), Error);
  CHECK_THROWS_AS(build_tilting(c, {obj(c, "e1", 0, 3)}, PointSet::none()), Error);
  CHECK_THROWS_AS(build_tilting(c, {}, PointSet::finite({"y7"})), Error);
  CHECK_THROWS_AS(build_tilting(c, {tube_object({"x1", 1}, 0, 1)}, PointSet::none()), Error);
  try {
    build_cotilting(c, {obj(c, "e1", 0, 2)}, PointSet::none());
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == "not_branch");
  }
}

TEST_CASE("resolving and Serre descriptors") {
  const auto c = make_curve({2, 2, 2});
  const auto r0 = resolving_descriptor(c, {}, PointSet::none());
  CHECK(r0.rays.empty());
  CHECK(r0.finite_part.empty());
  const auto s0 = serre_descriptor(c, {}, PointSet::none());
  CHECK(s0.full_tubes.empty());
  CHECK(s0.wings.empty());

  const BranchModule y{obj(c, "e1", 0, 1)};
  const auto s1 = serre_descriptor(c, y, PointSet::none());
  CHECK(s1.wings == std::vector<TubeObject>{obj(c, "e1", 1, 1)});

  const auto r2 = resolving_descriptor(c, {}, PointSet::finite({"e2"}));
  CHECK(r2.rays == std::vector<SimpleRegular>{{"e2", 0}, {"e2", 1}});
  const auto s2 = serre_descriptor(c, {}, PointSet::finite({"e2"}));
  CHECK(s2.full_tubes == std::vector<std::string>{"e2"});

  const auto c3 = make_curve({3, 3, 3});
  const BranchModule y3{obj(c3, "e1", 0, 2), obj(c3, "e1", 0, 1)};
  const auto s3 = serre_descriptor(c3, y3, PointSet::none());
  CHECK(s3.wings == std::vector<TubeObject>{obj(c3, "e1", 1, 2)});
  CHECK(serre_descriptor(c3, y3, PointSet::finite({"e1"})).wings.empty());
}

TEST_CASE("classification counts") {
  CHECK(classify_all(make_curve({})).size() == 8);
  CHECK(enumerate_branches(make_curve({2, 2, 2})).size() == 27);
  CHECK(classify_all(make_curve({2, 2, 2})).size() == 27 * 64);
  CHECK_THROWS_AS(classify_all(make_curve({2, 2, 2, 2})), Error);
  CHECK_THROWS_AS(classify_all(make_curve({2, 3, 7})), Error);
}

TEST_CASE("classification is closed under duality") {
  const auto c = make_curve({2, 3, 4});
  const auto pairs = classify_all(c);
  const std::set<ClassifiedPair> all(pairs.begin(), pairs.end());
  for (const auto& [y, p] : pairs) CHECK(all.count({normalize(dualize_branch(y)), p}) == 1);
}

TEST_CASE("injectivity and summand bound on (3,3,3)") {
  const auto c = make_curve({3, 3, 3});
  const auto branches = enumerate_branches(c);
  REQUIRE(branches.size() == 1000);
  std::vector<PointSet> finite_sets;
  for (const auto& p : point_set_templates(c))
    if (p.mode != PointSet::Mode::cofinite && p.mode != PointSet::Mode::all) finite_sets.push_back(p);
  REQUIRE(finite_sets.size() == 32);
  std::set<std::vector<std::string>> keys;
  std::size_t violations = 0;
  for (const auto& y : branches)
    for (const auto& p : finite_sets) {
      const auto t = build_tilting(c, y, p);
      if (t.count("findim") > 6) ++violations;
      keys.insert(t.canonical_key());
    }
  CHECK(keys.size() == 32000);
  CHECK(violations == 0);
}

TEST_CASE("cotilting complementarity and dual pattern") {
  const auto c = make_curve({2, 3, 3});
  for (const auto& [y, p] : classify_all(c)) {
    const auto w = build_cotilting(c, y, p);
    std::set<std::string> prufer_points;
    for (const auto& s : w.summands())
      if (const auto* pr = std::get_if<sym::Prufer>(&s)) {
        prufer_points.insert(pr->module.point.id);
        CHECK(prufer_in_perp(y, pr->module));
        CHECK_FALSE(contains(p, pr->module.point.id));
      }
    for (const auto& info : points(c))
      if (!contains(p, info.id)) CHECK(prufer_points.count(info.id) == 1);
    CHECK(dual_pattern_matches(c, y, p));
  }
}

TEST_CASE("membership in tilting classes") {
  const auto c = make_curve({2, 2, 2});
  TubeRealizer<Rational> tubes(canonical_context<Rational>(c));
  const auto& ctx = tubes.context().ctx;
  const auto sx = tubes.get(tube_object({"x1", 1}, 0, 1));

  SUBCASE("injectives lie in every class") {
    for (int v = 0; v < ctx.vertex_count(); ++v) {
      const auto inj = injective_module(ctx, v);
      CHECK(member_of_localization_class(tubes, inj, clique(c, "e1")).member);
      CHECK(member_of_tilting_class(tubes, inj, {obj(c, "e1", 0, 1)}, PointSet::finite({"x1"})).member);
    }
  }
  SUBCASE("a homogeneous simple is not perpendicular to itself") {
    const auto r = member_of_localization_class(tubes, sx, clique(c, "x1"));
    CHECK_FALSE(r.member);
    CHECK(r.witness == "T(x1,0,1)");
  }
  SUBCASE("the regular module fails for nonempty U") {
    auto lambda = projective_module(ctx, 0);
    for (int v = 1; v < ctx.vertex_count(); ++v) lambda = direct_sum(lambda, projective_module(ctx, v));
    for (const auto& u : std::vector<SimpleRegularSet>{{{"e1", 0}}, {{"x2", 0}}, clique(c, "e3")})
      CHECK_FALSE(member_of_localization_class(tubes, lambda, u).member);
    CHECK(member_of_localization_class(tubes, lambda, {}).member);
  }
  SUBCASE("rays in the class") {
    const auto r = member_of_tilting_class(tubes, sx, {}, PointSet::finite({"x1"}));
    CHECK(r.truncation_certified);
    CHECK(r.depth == truncation_depth());
    CHECK_FALSE(r.member);
    CHECK(member_of_tilting_class(tubes, sx, {}, PointSet::finite({"e1"})).member);
  }
}

TEST_CASE("extension closures") {
  const auto c = make_curve({3, 3, 3});
  CHECK(extension_closure(c, {{"e1", 0}, {"e1", 1}}, 6).size() == 3);
  CHECK(extension_closure(c, clique(c, "e2"), 4).size() == 12);
}

TEST_CASE("branch JSON") {
  const auto c = make_curve({3, 3, 3});
  const auto j = nlohmann::json::parse(R"([{"point":"e1","socle":0,"length":2},{"point":"e1","socle":0}])");
  const auto y = branch_from_json(c, j);
  CHECK(y == BranchModule{obj(c, "e1", 0, 1), obj(c, "e1", 0, 2)});
}
