#include <doctest.h>

#include "cyclic/arith.hpp"
#include "cyclic/deformation.hpp"
#include "cyclic/error.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cyclic;

namespace {

std::vector<MarkedGraph> all_fixtures() {
  return {fixture::e9(), fixture::two_full_vertices(1), fixture::two_full_vertices(3), fixture::swap_pair(),
          fixture::fixed_point_loop(), fixture::d8_cycle()};
}

}  // namespace

TEST_CASE("local node characters") {
  CHECK(local_node_character(4, 1, 1, false).exponent == 2);
  CHECK(local_node_character(4, 1, 3, false).trivial());
  CHECK(local_node_character(2, 1, 0, false).exponent == 1);
  CHECK(local_node_character(1, 0, 0, false).trivial());
  CHECK(local_node_character(2, 0, 0, true).trivial());
  CHECK(local_node_character(6, 1, 1, true).exponent == 2);
  CHECK(local_node_character(6, 1, 1, true).stab_order == 6);
  CHECK_THROWS_AS(local_node_character(3, 0, 0, true), StrataError);
  CHECK_THROWS_AS(local_node_character(6, 1, 2, true), StrataError);
}

TEST_CASE("node characters of the fixtures") {
  const auto e9 = node_character(fixture::e9(), 0);
  CHECK(e9.stab_order == 2);
  CHECK(e9.exponent == 1);
  CHECK(node_character(fixture::two_full_vertices(1), 0).exponent == 2);
  CHECK(node_character(fixture::two_full_vertices(3), 0).trivial());
  CHECK(node_character(fixture::swap_pair(), 0).swap);
  CHECK(node_character(fixture::swap_pair(), 0).trivial());
  CHECK(node_character(fixture::fixed_point_loop(), 0).trivial());
  for (int e = 0; e < 4; ++e) CHECK(node_character(fixture::d8_cycle(), e).trivial());
  auto bad = fixture::e9();
  bad.edges[0].stab = 3;
  CHECK_THROWS_AS(node_character(bad, 0), StrataError);
}

TEST_CASE("smoothability agrees with the explicit orbit model") {
  for (const auto& g : all_fixtures())
    for (std::size_t e = 0; e < g.edges.size(); ++e)
      CHECK(node_orbit_smoothable(g, static_cast<int>(e)) == oracle::node_orbit_smoothable(g, static_cast<int>(e)));
}

TEST_CASE("non-smoothability") {
  CHECK(is_equivariantly_nonsmoothable(fixture::e9()));
  CHECK(is_equivariantly_nonsmoothable(fixture::two_full_vertices(1)));
  CHECK_FALSE(is_equivariantly_nonsmoothable(fixture::two_full_vertices(3)));
  CHECK_FALSE(is_equivariantly_nonsmoothable(fixture::swap_pair()));
  CHECK_FALSE(is_equivariantly_nonsmoothable(fixture::fixed_point_loop()));
  CHECK_FALSE(is_equivariantly_nonsmoothable(fixture::d8_cycle()));
}

TEST_CASE("stratum dimension") {
  const auto e9 = stratum_dimension(fixture::e9());
  CHECK(e9.total == 10);
  REQUIRE(e9.per_orbit.size() == 2);
  CHECK(e9.per_orbit[0].cls == VertexClass::I1);
  CHECK(e9.per_orbit[0].base_genus == 0);
  CHECK(e9.per_orbit[0].marked == 6);
  CHECK(e9.per_orbit[0].contribution == 3);
  CHECK(e9.per_orbit[1].cls == VertexClass::I0);
  CHECK(e9.per_orbit[1].base_genus == 3);
  CHECK(e9.per_orbit[1].marked == 1);
  CHECK(e9.per_orbit[1].contribution == 7);

  const auto sp = stratum_dimension(fixture::swap_pair());
  REQUIRE(sp.per_orbit.size() == 1);
  CHECK(sp.per_orbit[0].cls == VertexClass::I2);
  CHECK(sp.per_orbit[0].marked == 1);
  CHECK(sp.total == 4);

  const auto loop = stratum_dimension(fixture::fixed_point_loop());
  CHECK(loop.per_orbit[0].base_genus == 0);
  CHECK(loop.per_orbit[0].marked == 4);
  CHECK(loop.total == 1);

  CHECK(stratum_dimension(fixture::two_full_vertices()).total == 10);
  CHECK(stratum_dimension(fixture::d8_cycle()).total == 3);
}

TEST_CASE("marked points count branch points and unramified node orbits") {
  CHECK(marked_points(fixture::e9(), 0) == 6);
  CHECK(marked_points(fixture::e9(), 1) == 1);
  CHECK(marked_points(fixture::swap_pair(), 1) == 1);
  CHECK(marked_points(fixture::two_full_vertices(), 1) == 2);
}

TEST_CASE("I0 contribution is 3g - 3 + r") {
  const auto g = fixture::build(2, {{1, 1, 2, 2, 0, {6}}, {1, 2, 1, 4, 4, {}}},
                                {{0, 1, 1, 0}, {0, 1, 1, 0}});
  REQUIRE(validate(g).ok());
  const auto b = stratum_dimension(g);
  CHECK(b.per_orbit[1].marked == 2);
  CHECK(b.per_orbit[1].contribution == 3 * 4 - 3 + 2);
}

TEST_CASE("invariance under change of generator") {
  for (const auto& g : all_fixtures())
    for (int u : units(g.d)) {
      const auto r = fixture::regenerate(g, u);
      CHECK(is_equivariantly_nonsmoothable(r) == is_equivariantly_nonsmoothable(g));
      CHECK(stratum_dimension(r).total == stratum_dimension(g).total);
    }
}
