#pragma once

#include <array>
#include <vector>

#include "cyclic/marked_graph.hpp"

namespace fixture {

struct OrbitSpec {
  int n = 1, ord2 = 1, d_i = 1, g = 0, h = 0;
  std::vector<int> k;
};

struct PairSpec {
  int o1 = 0, l1 = 0, o2 = 0, l2 = 0;
  bool swap = false;
  int delta = 0;
};

/// Graph in canonical form from orbit data and paired node orbits.
cyclic::MarkedGraph build(int d, const std::vector<OrbitSpec>& orbits, const std::vector<PairSpec>& pairs);

/// d = 2: genus-2 hyperelliptic vertex glued at a Weierstrass point to a
/// genus-3 vertex with trivial action. Total genus 5.
cyclic::MarkedGraph e9();

/// d = 4: two genus-8 vertices with H = Z/4, k = (1,0,1), joined at a type-1
/// point of the first and a type-`type2` point of the second.
cyclic::MarkedGraph two_full_vertices(int type2 = 1);

/// d = 2: two genus-2 vertices swapped by gamma, joined by one node.
cyclic::MarkedGraph swap_pair();

/// d = 2: genus-1 vertex, H = Z/2, k = (4), one loop joining two fixed points.
cyclic::MarkedGraph fixed_point_loop();

/// d = 8: one orbit of four genus-2 vertices (d_i = 2) joined in a cycle.
cyclic::MarkedGraph d8_cycle();

/// Renames vertices by `perm` (old index -> new index) and rewrites slots for
/// the new orbit bases. The curve is unchanged.
cyclic::MarkedGraph relabel(const cyclic::MarkedGraph& g, const std::vector<int>& perm);

/// The same curve marked by gamma^v, v a unit.
cyclic::MarkedGraph regenerate(const cyclic::MarkedGraph& g, int v);

}  // namespace fixture
