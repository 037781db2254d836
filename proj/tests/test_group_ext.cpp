#include <doctest.h>

#include "cyclic/error.hpp"
#include "cyclic/group_ext.hpp"

using namespace cyclic;

namespace {

bool abelian(const GroupTable& t) {
  for (int x = 0; x < t.order; ++x)
    for (int y = 0; y < t.order; ++y)
      if (t(x, y) != t(y, x)) return false;
  return true;
}

}  // namespace

TEST_CASE("presentations for d = 2") {
  const auto ps = enumerate_presentations(2);
  REQUIRE(ps.size() == 2);
  CHECK(ps[0] == ExtPresentation{2, 1, 1, 0, 0});
  CHECK(ps[1] == ExtPresentation{2, 1, 1, 0, 1});
  CHECK_THROWS_AS(enumerate_presentations(1), StrataError);
}

TEST_CASE("presentations for d = 4") {
  std::vector<ExtPresentation> both3;
  for (const auto& p : enumerate_presentations(4))
    if (p.l1 == 3 && p.l2 == 3) both3.push_back(p);
  CHECK(both3 == std::vector<ExtPresentation>{{4, 3, 3, 0, 0}, {4, 3, 3, 0, 2}, {4, 3, 3, 2, 1}, {4, 3, 3, 2, 3}});
  for (const auto& p : enumerate_presentations(4))
    if (p.l1 == 1) CHECK(p.e12 % 2 == 0);
}

TEST_CASE("rewriting") {
  const ExtPresentation p{4, 3, 3, 2, 1};
  CHECK(normal_form(p, {}) == 0);
  CHECK(normal_form(p, {1, 0}) == GroupTable::element(3, 1, 0));
  CHECK(normal_form(p, {1, 1}) == 0);
  CHECK(normal_form(p, {2, 1}) == GroupTable::element(2, 1, 1));
  CHECK(normal_form(p, {0, 0, 0, 0}) == 0);
  CHECK(normal_form(p, {0, 2, 0}) == GroupTable::element(0, 0, 1));
}

TEST_CASE("group tables") {
  for (const auto& p : enumerate_presentations(2)) {
    const auto t = build_group(p);
    CHECK(t.order == 8);
    CHECK(abelian(t));
  }
  const auto t = build_group({4, 3, 3, 0, 0});
  CHECK(t.order == 16);
  CHECK_FALSE(abelian(t));
  CHECK(t.element_order(GroupTable::element(1, 0, 0)) == 4);
  CHECK(t.element_order(GroupTable::element(0, 1, 0)) == 2);
  CHECK(t.element_order(GroupTable::element(1, 1, 0)) == 2);
  CHECK(t(GroupTable::element(0, 1, 0), GroupTable::element(1, 0, 0)) == GroupTable::element(3, 1, 0));
  CHECK(abelian(build_group({4, 1, 1, 0, 0})));
  CHECK_FALSE(abelian(build_group({4, 1, 1, 2, 3})));
}

TEST_CASE("constraints are exactly the consistent presentations") {
  for (int d = 2; d <= 6; ++d)
    for (int l1 = 0; l1 < d; ++l1)
      for (int l2 = 0; l2 < d; ++l2)
        for (int e = 0; e < d; ++e)
          for (int f = 0; f < d; ++f) {
            const ExtPresentation p{d, l1, l2, e, f};
            bool built = true;
            try {
              build_group(p);
            } catch (const StrataError& err) {
              CHECK(err.code() == Errc::InconsistentPresentation);
              built = false;
            }
            CHECK_MESSAGE(built == satisfies_constraints(p), d, " ", l1, " ", l2, " ", e, " ", f);
          }
}
