#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "cyclic/census.hpp"
#include "cyclic/deformation.hpp"
#include "cyclic/error.hpp"
#include "cyclic/io.hpp"
#include "fixtures.hpp"

using namespace cyclic;

TEST_CASE("small census entries are valid, distinct and non-smoothable") {
  for (int d : {2, 3, 4}) {
    const auto r = enumerate_strata(2, d);
    CHECK(r.complete);
    CHECK(r.limits.max_vertices == 2);
    CHECK(r.limits.max_edges == 3);
    std::set<Encoding> seen;
    for (const auto& e : r.entries) {
      CHECK(seen.insert(e.encoding).second);
      const auto g = decode_numerical_type(e.encoding);
      CHECK(validate(g).ok());
      CHECK(total_genus(g) == 2);
      CHECK(e.genus == 2);
      CHECK(e.nonsmoothable);
      CHECK(is_equivariantly_nonsmoothable(g));
      CHECK(canonical_numerical_type(g) == e.encoding);
    }
    CHECK(std::is_sorted(r.entries.begin(), r.entries.end(),
                         [](const CensusEntry& a, const CensusEntry& b) { return a.encoding < b.encoding; }));
  }
  CHECK(enumerate_strata(2, 2).entries.size() == 1);
}

TEST_CASE("the genus-5 involution census contains the two-vertex example") {
  const auto r = enumerate_strata(5, 2);
  const auto target = canonical_numerical_type(fixture::e9());
  const auto it = std::find_if(r.entries.begin(), r.entries.end(),
                               [&](const CensusEntry& e) { return e.encoding == target; });
  REQUIRE(it != r.entries.end());
  CHECK(it->dimension == 10);
  CHECK(it->verdict == MaximalityStatus::Maximal);
  const auto comps = components(r);
  CHECK(comps.maximal.size() == 1);
  CHECK(comps.maximal[0].encoding == target);
}

TEST_CASE("census with no admissible actions") {
  CHECK(enumerate_strata(2, 101).entries.empty());
  CHECK_THROWS_AS(enumerate_strata(1, 2), StrataError);
  CHECK_THROWS_AS(enumerate_strata(3, 1), StrataError);
}

TEST_CASE("limits and truncation") {
  const auto full = enumerate_strata(4, 2);
  const auto cut = enumerate_strata(4, 2, {2, 0});
  CHECK(full.complete);
  CHECK_FALSE(cut.complete);
  CHECK_THROWS_AS(require_complete(cut), StrataError);
  CHECK_NOTHROW(require_complete(full));
  for (const auto& e : cut.entries)
    CHECK(std::any_of(full.entries.begin(), full.entries.end(),
                      [&](const CensusEntry& f) { return f.encoding == e.encoding; }));
  CHECK(enumerate_strata(4, 2, {100, 100}).complete);
  CHECK(enumerate_strata(4, 2, {100, 100}).entries == full.entries);
}

TEST_CASE("census is deterministic across thread counts") {
  const auto one = enumerate_strata(4, 4, {}, 1);
  const auto many = enumerate_strata(4, 4, {}, 3);
  CHECK(one.entries == many.entries);
}

TEST_CASE("census files round trip") {
  const auto r = enumerate_strata(4, 3);
  std::stringstream ss;
  write_census(ss, r);
  const auto back = read_census(ss);
  CHECK(back.g == 4);
  CHECK(back.d == 3);
  CHECK(back.complete == r.complete);
  CHECK(back.limits.max_vertices == r.limits.max_vertices);
  CHECK(back.entries == r.entries);
}

TEST_CASE("components are census entries") {
  const auto r = enumerate_strata(4, 4);
  const auto c = components(r);
  for (const auto* list : {&c.maximal, &c.unverifiable})
    for (const auto& e : *list)
      CHECK(std::find(r.entries.begin(), r.entries.end(), e) != r.entries.end());
  for (const auto& e : c.maximal) CHECK(e.verdict == MaximalityStatus::Maximal);
  for (const auto& e : c.unverifiable) CHECK(e.verdict == MaximalityStatus::AssumptionsUnverifiable);
}

TEST_CASE("the non-smoothable filter agrees with the full type list") {
  for (int d : {2, 3, 4}) {
    bool complete = false;
    const auto all = enumerate_types(3, d, {}, false, &complete);
    CHECK(complete);
    const auto ns = enumerate_types(3, d, {}, true, &complete);
    std::vector<Encoding> filtered;
    for (const auto& e : all)
      if (is_equivariantly_nonsmoothable(decode_numerical_type(e))) filtered.push_back(e);
    CHECK(filtered == ns);
  }
}

TEST_CASE("make_entry") {
  const auto e = make_entry(fixture::two_full_vertices(1));
  CHECK(e.genus == 16);
  CHECK(e.dimension == 10);
  CHECK(e.nonsmoothable);
  CHECK(e.verdict == MaximalityStatus::NotMaximal);
  CHECK(e.reason == Reason::CaseB);
  CHECK_FALSE(e.witness_summary.empty());
  const auto j = entry_to_json(e);
  CHECK(entry_from_json(j) == e);
}
