#include "cyclic/deformation.hpp"

#include <set>

#include "cyclic/arith.hpp"
#include "cyclic/error.hpp"

namespace cyclic {

NodeCharacter local_node_character(int m, int rot1, int rot2, bool swap) {
  if (m < 1) throw StrataError(Errc::InconsistentStabilizer, "node stabilizer order must be positive");
  if (!swap) return {m, static_cast<int>(mod(std::int64_t{rot1} + rot2, m)), false};
  if (m % 2 != 0) throw StrataError(Errc::InconsistentStabilizer, "a swapping node stabilizer has even order");
  const int half = m / 2;
  if (mod(rot1, half) != mod(rot2, half))
    throw StrataError(Errc::InconsistentStabilizer, "swapped branches carry different rotations");
  // (x, y) -> (c y, c' x) with c c' = exp(2 pi i rot / half) acts on xy by c c'.
  return {m, static_cast<int>(mod(2 * std::int64_t{rot1}, m)), true};
}

NodeCharacter node_character(const MarkedGraph& g, int edge) {
  const EdgeData& e = g.edges.at(edge);
  const int want = e.swap ? e.stab / 2 : e.stab;
  if (e.ends[0].stab != want || e.ends[1].stab != want || (e.swap && e.stab % 2 != 0))
    throw StrataError(Errc::InconsistentStabilizer,
                      "edge " + std::to_string(e.id) + ": branch stabilizers " + std::to_string(e.ends[0].stab) +
                          ", " + std::to_string(e.ends[1].stab) + " do not fit |G_P| = " + std::to_string(e.stab));
  return local_node_character(e.stab, e.ends[0].rot, e.ends[1].rot, e.swap);
}

bool node_orbit_smoothable(const MarkedGraph& g, int edge) { return node_character(g, edge).trivial(); }

bool is_equivariantly_nonsmoothable(const MarkedGraph& g) {
  if (g.edges.empty()) return false;
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (node_orbit_smoothable(g, static_cast<int>(e))) return false;
  return true;
}

int marked_points(const MarkedGraph& g, int vertex) {
  const VertexData& v = g.vertices.at(vertex);
  std::set<int> free_orbits;
  for (const auto& e : g.edges)
    for (const auto& h : e.ends)
      if (h.vertex == vertex && h.slot.type == 0) free_orbits.insert(slot_torsor(v, h.slot));
  return v.branch_point_count() + static_cast<int>(free_orbits.size());
}

StratumDimensionBreakdown stratum_dimension(const MarkedGraph& g) {
  const OrbitPartition op = orbit_partition(g);
  StratumDimensionBreakdown out;
  for (std::size_t o = 0; o < op.orbits.size(); ++o) {
    const int v = op.orbits[o].front();
    const VertexData& x = g.vertices[v];
    OrbitDimension od;
    od.orbit = static_cast<int>(o);
    od.vertex = v;
    od.cls = op.classes[v];
    od.base_genus = x.h_order > 1 ? x.quotient_genus : x.genus;
    od.marked = marked_points(g, v);
    od.contribution = teich_dimension(od.base_genus, od.marked);
    out.total += od.contribution;
    out.per_orbit.push_back(od);
  }
  return out;
}

}  // namespace cyclic
