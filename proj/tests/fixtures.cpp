#include "fixtures.hpp"

#include <algorithm>
#include <numeric>

#include "cyclic/maximality.hpp"

namespace fixture {

using namespace cyclic;

MarkedGraph build(int d, const std::vector<OrbitSpec>& orbits, const std::vector<PairSpec>& pairs) {
  Encoding e;
  auto put = [&](int w) {
    e.push_back(static_cast<std::uint8_t>(w >> 8));
    e.push_back(static_cast<std::uint8_t>(w & 0xff));
  };
  put(1);
  put(d);
  put(static_cast<int>(orbits.size()));
  for (const auto& o : orbits) {
    for (int w : {o.n, o.ord2, o.d_i, o.g, o.h}) put(w);
    for (int x : o.k) put(x);
  }
  put(static_cast<int>(pairs.size()));
  for (const auto& p : pairs)
    for (int w : {p.o1, p.l1, p.o2, p.l2, p.swap ? 1 : 0, p.delta}) put(w);
  return decode_numerical_type(e);
}

MarkedGraph e9() { return build(2, {{1, 1, 2, 2, 0, {6}}, {1, 2, 1, 3, 3, {}}}, {{0, 1, 1, 0}}); }

MarkedGraph two_full_vertices(int type2) {
  return build(4, {{1, 1, 4, 8, 2, {1, 0, 1}}, {1, 1, 4, 8, 2, {1, 0, 1}}}, {{0, 1, 1, type2}});
}

MarkedGraph swap_pair() { return build(2, {{2, 1, 1, 2, 2, {}}}, {{0, 0, 0, 0, true, 0}}); }

MarkedGraph fixed_point_loop() { return build(2, {{1, 1, 2, 1, 0, {4}}}, {{0, 1, 0, 1}}); }

MarkedGraph d8_cycle() { return build(8, {{4, 1, 2, 2, 0, {6}}}, {{0, 1, 0, 1, false, 1}}); }

MarkedGraph relabel(const MarkedGraph& g, const std::vector<int>& perm) {
  const OrbitPartition op = orbit_partition(g);
  const int nv = static_cast<int>(g.vertices.size());
  // Position of each vertex in its old orbit list and the new base position.
  std::vector<int> pos(nv), shift_from(nv);
  for (const auto& o : op.orbits) {
    int best = 0;
    for (std::size_t j = 0; j < o.size(); ++j) {
      pos[o[j]] = static_cast<int>(j);
      if (perm[o[j]] < perm[o[best]]) best = static_cast<int>(j);
    }
    for (int v : o) shift_from[v] = best;
  }
  MarkedGraph out = g;
  for (int v = 0; v < nv; ++v) {
    out.vertices[perm[v]] = g.vertices[v];
    out.gamma_vertex[perm[v]] = perm[g.gamma_vertex[v]];
  }
  for (auto& e : out.edges)
    for (auto& h : e.ends) {
      const int old = h.vertex;
      if (pos[old] < shift_from[old]) h.slot = shift_slot(g.vertices[old], h.slot, -1);
      h.vertex = perm[old];
    }
  finalize_graph(out);
  return out;
}

MarkedGraph regenerate(const MarkedGraph& g, int v) {
  return materialize(g, power(g, gamma_automorphism(g), v));
}

}  // namespace fixture
