#pragma once

// Combinatorial model of a stable curve with an effective Z/d action.
//
// Every gamma-orbit of vertices is stored in canonical form: its base is the
// vertex with the smallest index, gamma maps copy j to copy j+1 by the
// identity on slot labels, and maps the last copy back to the base by the
// generator of H_i = G_i / G''_i. Slot labels on every copy therefore refer to
// the same normalization C~_i.
//
// A slot is (type, fiber). For a branch type l > 0 of the H_i-cover the
// fiber label is b * F + f with b the branch point index (0 <= b < k_l),
// F = gcd(l, d_i) the number of points over it and f in Z/F; the H_i
// generator sends f to f + 1. Type 0 marks points with trivial H_i
// stabilizer: fiber = orbit * d_i + f, any orbit index >= 0.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cyclic/branching.hpp"

namespace cyclic {

struct Slot {
  int type = 0;
  int fiber = 0;

  friend auto operator<=>(const Slot&, const Slot&) = default;
  friend bool operator==(const Slot&, const Slot&) = default;
};

struct HalfEdge {
  int vertex = 0;  // index into MarkedGraph::vertices
  Slot slot;
  int rot = 0;   // exponent of gamma^(d/stab) on the branch tangent, mod stab
  int stab = 1;  // order of the stabilizer of this branch point in G
};

struct VertexData {
  int id = 0;
  int genus = 0;        // genus of the normalization
  int orbit_len = 1;    // n_i = [G : G_i]
  int ord_trivial = 1;  // |G''_i|
  int h_order = 1;      // d_i = |H_i|
  int quotient_genus = 0;
  std::vector<int> k;           // branching sequence of H_i (d_i - 1 entries)
  std::vector<int> free_slots;  // types of branch points carrying no node

  int branch_point_count() const;
  BranchingSequence branching() const;  // requires h_order >= 2
};

struct EdgeData {
  int id = 0;
  std::array<HalfEdge, 2> ends;
  bool loop = false;
  bool swap = false;  // the node stabilizer exchanges the two branches
  int stab = 1;       // |G_P|
};

struct MarkedGraph {
  int d = 1;
  std::vector<VertexData> vertices;
  std::vector<EdgeData> edges;
  std::vector<int> gamma_vertex;  // by index
  std::vector<int> gamma_edge;    // by index
};

enum class VertexClass { I0, I1, I2 };
std::string_view to_string(VertexClass c);

struct ValidationIssue {
  std::string location;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string summary() const;
};

// --- slot geometry -------------------------------------------------------

/// Local data of a slot type on a vertex's normalization under H_i.
PointType slot_point_type(const VertexData& v, int type);
/// Points in the H_i-orbit of a slot of this type.
int slot_fiber_size(const VertexData& v, int type);
/// Order of the G-stabilizer of a branch point of this type.
int full_stabilizer(const VertexData& v, int type);
/// Exponent of gamma^(d/stab) on the tangent line, mod full_stabilizer.
int full_rotation(const VertexData& v, int type);
HalfEdge make_half_edge(const MarkedGraph& g, int vertex, Slot slot);

/// Index of the H_i-orbit (branch point or free orbit) containing the slot.
int slot_torsor(const VertexData& v, Slot s);
/// Applies the t-th power of the H_i generator to a slot.
Slot shift_slot(const VertexData& v, Slot s, std::int64_t t);

// --- orbits and the gamma action ------------------------------------------

struct OrbitPartition {
  std::vector<std::vector<int>> orbits;  // each listed base, gamma(base), ...
  std::vector<int> orbit_of;
  std::vector<VertexClass> classes;      // per vertex
};

/// Orbits of gamma_vertex without any validity assumption beyond it being a
/// permutation.
OrbitPartition orbit_partition(const MarkedGraph& g);

struct PointRef {
  int vertex = 0;
  Slot slot;
  friend auto operator<=>(const PointRef&, const PointRef&) = default;
  friend bool operator==(const PointRef&, const PointRef&) = default;
};

/// An automorphism of the curve permuting components inside gamma-orbits:
/// copy v goes to copy sigma[v] through the H-element generator^twist[v],
/// written in the orbit's common coordinates.
struct CurveAutomorphism {
  std::vector<int> sigma;
  std::vector<int> twist;

  friend auto operator<=>(const CurveAutomorphism&, const CurveAutomorphism&) = default;
  friend bool operator==(const CurveAutomorphism&, const CurveAutomorphism&) = default;
};

CurveAutomorphism identity_automorphism(const MarkedGraph& g);
/// gamma itself in canonical coordinates.
CurveAutomorphism gamma_automorphism(const MarkedGraph& g);
PointRef apply(const MarkedGraph& g, const CurveAutomorphism& a, PointRef p);
/// (a after b)
CurveAutomorphism compose(const MarkedGraph& g, const CurveAutomorphism& a, const CurveAutomorphism& b);
CurveAutomorphism inverse(const MarkedGraph& g, const CurveAutomorphism& a);
CurveAutomorphism power(const MarkedGraph& g, const CurveAutomorphism& a, int e);
/// lcm over sigma-cycles of length * ord(sum of twists in H_i).
int automorphism_order(const MarkedGraph& g, const CurveAutomorphism& a);
/// True when the induced map on node points sends edges onto edges.
bool preserves_edges(const MarkedGraph& g, const CurveAutomorphism& a);

/// Fills everything derivable from vertices, edge slots and gamma_vertex:
/// half-edge rotations and stabilizers, loop flags, gamma_edge, edge swap
/// flags and stabilizer orders. Throws InvalidGraph when gamma does not map
/// edges to edges.
void finalize_graph(MarkedGraph& g);

ValidationReport validate(const MarkedGraph& g);

/// Sum of g_i + #edges - #vertices + 1. Throws Disconnected.
int total_genus(const MarkedGraph& g);

bool is_connected(const MarkedGraph& g);

struct SubgroupOrders {
  int g_i = 1;   // |G_i|
  int g1_i = 1;  // |G'_i|, fixes every node on C_i
  int g2_i = 1;  // |G''_i|
  int h_i = 1;   // |H_i|
  int h1_i = 1;  // |H'_i|
  int k = 1;     // |K|
  int k_v = 1;   // |K_v|
};

SubgroupOrders subgroup_invariants(const MarkedGraph& g, int vertex);

// --- numerical types ------------------------------------------------------

/// One gamma-orbit of node points on an orbit of components, paired with its
/// partner orbit of node points.
struct TorsorAttachment {
  int type = 0;
  int size = 0;  // number of node points in the G-orbit
  int partner_type = 0;
  bool swap = false;
  std::vector<int> partner_shape;  // vertex-orbit label of the partner

  friend auto operator<=>(const TorsorAttachment&, const TorsorAttachment&) = default;
  friend bool operator==(const TorsorAttachment&, const TorsorAttachment&) = default;
};

struct CanonicalOrbitForm {
  int copies = 1;
  std::vector<int> shape;  // n, |G''|, d_i, g, h, k_1..k_{d_i-1}
  std::vector<TorsorAttachment> attachments;
  // gamma acts on copies as C(1) -> C(2) -> ... -> C(n) by the identity and
  // C(n) -> C(1) by the H-generator; every copy carries the same attachments.

  friend bool operator==(const CanonicalOrbitForm&, const CanonicalOrbitForm&) = default;
};

/// The orbit of vertex `vertex` written in canonical form.
CanonicalOrbitForm canonical_orbit_form(const MarkedGraph& g, int vertex);

using Encoding = std::vector<std::uint8_t>;

/// Canonical byte encoding of the numerical type: minimum over vertex-orbit
/// relabelings and units of Z/d. Requires a valid graph.
Encoding canonical_numerical_type(const MarkedGraph& g);

/// Rebuilds a representative graph (in canonical form) from an encoding.
MarkedGraph decode_numerical_type(const Encoding& e);

std::string to_hex(const Encoding& e);
Encoding from_hex(const std::string& s);

}  // namespace cyclic
