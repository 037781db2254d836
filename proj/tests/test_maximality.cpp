#include <doctest.h>

#include <algorithm>

#include "cyclic/arith.hpp"
#include "cyclic/deformation.hpp"
#include "cyclic/error.hpp"
#include "cyclic/maximality.hpp"
#include "fixtures.hpp"

using namespace cyclic;

namespace {

CurveAutomorphism twists(std::vector<int> t) {
  std::vector<int> sigma(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) sigma[i] = static_cast<int>(i);
  return {sigma, std::move(t)};
}

}  // namespace

TEST_CASE("fullness oracle") {
  CHECK(fullness_oracle(2, 2, {6}) == Fullness::Verified);
  CHECK(fullness_oracle(1, 2, {4}) == Fullness::Violated);
  CHECK(fullness_oracle(2, 1, {}) == Fullness::Violated);
  CHECK(fullness_oracle(3, 1, {}) == Fullness::Verified);
  CHECK(fullness_oracle(2, 3, {2, 2}) == Fullness::Violated);
  CHECK(fullness_oracle(2, 2, {2}) == Fullness::Violated);
  CHECK(fullness_oracle(3, 3, {1, 1}) == Fullness::Unverifiable);
  CHECK(fullness_oracle(3, 4, {2, 0, 2}) == Fullness::Unverifiable);
  CHECK(fullness_oracle(8, 4, {1, 0, 1}) == Fullness::Verified);
  CHECK(fullness_oracle(4, 4, {1, 4, 1}) == Fullness::Verified);
  std::string note;
  CHECK(fullness_oracle(2, 1, {}, &note) == Fullness::Violated);
  CHECK_FALSE(note.empty());
}

TEST_CASE("assumption report") {
  const auto e9 = check_assumptions(fixture::e9());
  CHECK(e9.nonsmoothable_ok);
  CHECK_FALSE(e9.any_violated());
  CHECK_FALSE(e9.any_unverifiable());
  const auto sm = check_assumptions(fixture::two_full_vertices(3));
  CHECK_FALSE(sm.nonsmoothable_ok);
  CHECK(sm.any_violated());
  CHECK_THROWS_AS(automorphism_group(fixture::two_full_vertices(3)), StrataError);
}

TEST_CASE("automorphism groups") {
  const auto e9 = automorphism_group(fixture::e9());
  CHECK(e9.size() == 2);
  const auto g = fixture::two_full_vertices(1);
  const auto auts = automorphism_group(g);
  CHECK(auts.size() == 16);
  CHECK(std::is_sorted(auts.begin(), auts.end()));
  CHECK(elements_of_order_d(g, auts, 4).size() == 12);
  for (const auto& a : auts) {
    CHECK(preserves_edges(g, a));
    for (const auto& b : auts) CHECK(std::binary_search(auts.begin(), auts.end(), compose(g, a, b)));
  }
  const auto cyc = model_automorphisms(fixture::d8_cycle());
  CHECK(std::binary_search(cyc.begin(), cyc.end(), gamma_automorphism(fixture::d8_cycle())));
  for (const auto& a : cyc) CHECK(preserves_edges(fixture::d8_cycle(), a));
}

TEST_CASE("case 1 tests") {
  const auto g = fixture::two_full_vertices(1);
  CHECK(case1_test(g, twists({1, 0})) == Reason::CaseB);
  CHECK(case1_test(g, twists({0, 1})) == Reason::CaseB);
  CHECK(case1_test(g, twists({1, 2})) == Reason::CaseC);
  CHECK_FALSE(case1_test(g, twists({1, 3})).has_value());
  CHECK_FALSE(case1_test(g, twists({1, 1})).has_value());
  CHECK(cycle_counts(g, twists({1, 3})) == std::vector<int>{1, 1});
  CHECK(orbit_exponents(g, twists({1, 3})) == std::vector<int>{1, 3});
  for (const auto& b : elements_of_order_d(g, model_automorphisms(g), 4))
    CHECK(case1_test(g, b) == case1_test(g, inverse(g, b)));
  const auto cyc = fixture::d8_cycle();
  for (const auto& b : model_automorphisms(cyc))
    CHECK(case1_test(cyc, b) == case1_test(cyc, inverse(cyc, b)));
}

TEST_CASE("zeta condition") {
  const auto g = fixture::two_full_vertices(1);
  CHECK_FALSE(zeta_condition(g, twists({1, 3})));
  CHECK(zeta_condition(g, twists({1, 1})));
  CHECK(zeta_condition(g, twists({3, 3})));
  CHECK_THROWS_AS(zeta_condition(g, twists({1, 0})), StrataError);
  const auto z = zeta_diagnostics(g, twists({1, 3}));
  REQUIRE(z.size() == 1);
  CHECK(z[0].applies);
  CHECK(z[0].m == 4);
  CHECK(z[0].exponent == 0);
}

TEST_CASE("maximality verdicts") {
  const auto e9 = is_maximal(fixture::e9());
  CHECK(e9.status == MaximalityStatus::Maximal);
  CHECK_FALSE(e9.witness.has_value());

  const auto t = is_maximal(fixture::two_full_vertices(1));
  CHECK(t.status == MaximalityStatus::NotMaximal);
  REQUIRE(t.witness.has_value());
  CHECK(*t.witness == twists({0, 1}));
  CHECK(t.reason == Reason::CaseB);

  CHECK(is_maximal(fixture::two_full_vertices(3)).status == MaximalityStatus::AssumptionsViolated);
  CHECK(is_maximal(fixture::swap_pair()).status == MaximalityStatus::AssumptionsViolated);
  CHECK(is_maximal(fixture::fixed_point_loop()).status == MaximalityStatus::AssumptionsViolated);
}

TEST_CASE("materialize") {
  const auto g = fixture::two_full_vertices(1);
  const auto m = materialize(g, twists({1, 3}));
  CHECK(validate(m).ok());
  CHECK(total_genus(m) == 16);
  CHECK(canonical_numerical_type(m) == canonical_numerical_type(fixture::two_full_vertices(3)));
  CHECK_FALSE(is_equivariantly_nonsmoothable(m));

  const auto b = materialize(g, twists({0, 1}));
  CHECK(validate(b).ok());
  CHECK(total_genus(b) == 16);
  CHECK(stratum_dimension(b).total > stratum_dimension(g).total);

  for (const auto& x : {fixture::e9(), fixture::d8_cycle(), fixture::swap_pair(), g}) {
    const auto gamma = gamma_automorphism(x);
    for (int u : units(x.d)) {
      const auto r = materialize(x, power(x, gamma, u));
      CHECK(canonical_numerical_type(r) == canonical_numerical_type(x));
      CHECK(stratum_dimension(r).total == stratum_dimension(x).total);
    }
    for (const auto& beta : elements_of_order_d(x, model_automorphisms(x), x.d)) {
      const auto r = materialize(x, beta);
      CHECK_MESSAGE(validate(r).ok(), validate(r).summary());
      CHECK(total_genus(r) == total_genus(x));
      CHECK(stratum_dimension(r).total >= stratum_dimension(x).total);
    }
  }
  CHECK_THROWS_AS(materialize(g, twists({2, 2})), StrataError);
}
