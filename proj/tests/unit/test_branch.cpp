#include "cct/branch/branch.hpp"
#include "cct/linalg/scalar.hpp"

#include <doctest.h>

using namespace cct;

namespace {

TubeObject obj(const TubePoint& p, int s, int l) { return tube_object(p, s, l); }

}  // namespace

TEST_CASE("branch examples") {
  const TubePoint r2{"e1", 2}, r3{"e1", 3};
  CHECK(is_branch({}));
  CHECK(is_branch({obj(r2, 0, 1)}));
  CHECK_FALSE(is_branch(normalize({obj(r2, 0, 1), obj(r2, 1, 1)})));
  CHECK_FALSE(is_branch({obj(r3, 0, 2)}));
  CHECK(is_branch(normalize({obj(r3, 0, 2), obj(r3, 0, 1)})));
  CHECK_THROWS_AS(check_branch({obj(r3, 0, 3)}), Error);
  CHECK_THROWS_AS(check_branch({obj({"x1", 1}, 0, 1)}), Error);
  const auto report = check_branch({obj(r3, 0, 2)});
  CHECK(report.violations.size() == 1);
}

TEST_CASE("per tube counts match the exhaustive filter") {
  const std::vector<std::size_t> expected{1, 3, 10, 35, 126};
  for (int r = 1; r <= 5; ++r) {
    const TubePoint p{"e1", r};
    const auto fast = enumerate_tube_branches(p);
    CHECK(fast.size() == expected[r - 1]);
    CHECK(fast == exhaustive_tube_branches(p));
    for (const auto& y : fast) CHECK(static_cast<int>(y.size()) <= r - 1);
  }
  CHECK(enumerate_tube_branches({"e1", 6}).size() == 462);
}

TEST_CASE("curve level enumeration") {
  CHECK(enumerate_branches(make_curve({2, 2, 2, 2})).size() == 81);
  CHECK(enumerate_branches(make_curve({})).size() == 1);
  CHECK(enumerate_branches(make_curve({3, 3, 3})).size() == 1000);
  CHECK(enumerate_branches(make_curve({3, 3, 3}), std::vector<std::string>{"e2"}).size() == 10);
  const auto all = enumerate_branches(make_curve({2, 3, 6}));
  for (const auto& y : all) CHECK(y.size() <= 8);
}

TEST_CASE("duality and tau on branches") {
  CHECK(dualize_branch({}).empty());
  for (const auto& y : enumerate_tube_branches({"e1", 3})) {
    CHECK(dualize_branch(dualize_branch(y)) == y);
    CHECK(is_branch(dualize_branch(y)));
  }
  const TubePoint r3{"e1", 3};
  for (int s = 0; s < 3; ++s)
    for (int l = 1; l < 3; ++l) {
      const TubeObject x = obj(r3, s, l);
      CHECK(is_branch({x}) == (l == 1));
    }
  CHECK(tau_minus_branch({obj(r3, 2, 1)}) == BranchModule{obj(r3, 0, 1)});
}
