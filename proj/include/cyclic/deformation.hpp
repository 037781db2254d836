#pragma once

#include <string>
#include <vector>

#include "cyclic/marked_graph.hpp"

namespace cyclic {

/// Character of the node stabilizer G_P on the smoothing parameter t = xy,
/// normalized to the generator gamma^(d / stab_order).
struct NodeCharacter {
  int stab_order = 1;
  int exponent = 0;
  bool swap = false;

  bool trivial() const { return exponent == 0; }
  friend bool operator==(const NodeCharacter&, const NodeCharacter&) = default;
};

/// Character from local data. Without swap, m = |G_P| and rot1, rot2 are the
/// exponents of the generator on the two branches. With swap, m = |G_P| is even,
/// the generator exchanges the branches and rot1 = rot2 is the exponent of its
/// square on either branch (an element of Z/(m/2)).
NodeCharacter local_node_character(int m, int rot1, int rot2, bool swap);

/// Throws InconsistentStabilizer when the end stabilizers do not fit |G_P|.
NodeCharacter node_character(const MarkedGraph& g, int edge);
bool node_orbit_smoothable(const MarkedGraph& g, int edge);
/// True iff the graph has nodes and none of them can be smoothed equivariantly.
bool is_equivariantly_nonsmoothable(const MarkedGraph& g);

struct OrbitDimension {
  int orbit = 0;         // index into orbit_partition(g).orbits
  int vertex = 0;        // representative vertex index
  VertexClass cls = VertexClass::I0;
  int base_genus = 0;    // g_i for I0, h_i otherwise
  int marked = 0;        // r_i
  int contribution = 0;
};

struct StratumDimensionBreakdown {
  std::vector<OrbitDimension> per_orbit;
  int total = 0;
};

/// r_i: number of H_i-orbits of special points on the normalization, i.e.
/// branch points plus orbits of unramified node points.
int marked_points(const MarkedGraph& g, int vertex);

StratumDimensionBreakdown stratum_dimension(const MarkedGraph& g);

}  // namespace cyclic
