#include "cyclic/marked_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "cyclic/arith.hpp"
#include "cyclic/error.hpp"

namespace cyclic {

int VertexData::branch_point_count() const {
  return std::accumulate(k.begin(), k.end(), 0);
}

BranchingSequence VertexData::branching() const { return {h_order, k}; }

std::string_view to_string(VertexClass c) {
  switch (c) {
    case VertexClass::I0: return "I0";
    case VertexClass::I1: return "I1";
    case VertexClass::I2: return "I2";
  }
  return "?";
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& i : issues) os << i.location << ": " << i.message << '\n';
  return os.str();
}

PointType slot_point_type(const VertexData& v, int type) {
  if (v.h_order <= 1) return {1, 1, 0};
  return point_type(v.h_order, type);
}

int slot_fiber_size(const VertexData& v, int type) { return slot_point_type(v, type).fiber; }

int full_stabilizer(const VertexData& v, int type) {
  return slot_point_type(v, type).stab * v.ord_trivial;
}

int full_rotation(const VertexData& v, int type) {
  const PointType pt = slot_point_type(v, type);
  return static_cast<int>(mod(std::int64_t{pt.rot} * v.ord_trivial, pt.stab * v.ord_trivial));
}

HalfEdge make_half_edge(const MarkedGraph& g, int vertex, Slot slot) {
  const VertexData& v = g.vertices.at(vertex);
  return {vertex, slot, full_rotation(v, slot.type), full_stabilizer(v, slot.type)};
}

int slot_torsor(const VertexData& v, Slot s) { return s.fiber / slot_fiber_size(v, s.type); }

Slot shift_slot(const VertexData& v, Slot s, std::int64_t t) {
  const int f = slot_fiber_size(v, s.type);
  const int b = s.fiber / f;
  return {s.type, static_cast<int>(b * f + mod(s.fiber % f + t, f))};
}

OrbitPartition orbit_partition(const MarkedGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  OrbitPartition out;
  out.orbit_of.assign(n, -1);
  out.classes.assign(n, VertexClass::I1);
  for (int v = 0; v < n; ++v) {
    if (out.orbit_of[v] >= 0) continue;
    std::vector<int> orbit;
    int w = v;
    while (w >= 0 && w < n && out.orbit_of[w] < 0) {
      out.orbit_of[w] = static_cast<int>(out.orbits.size());
      orbit.push_back(w);
      w = g.gamma_vertex.at(w);
    }
    out.orbits.push_back(std::move(orbit));
  }
  for (int v = 0; v < n; ++v) {
    const VertexData& x = g.vertices[v];
    const int len = static_cast<int>(out.orbits[out.orbit_of[v]].size());
    if (x.ord_trivial == g.d)
      out.classes[v] = VertexClass::I0;
    else if (len == 1)
      out.classes[v] = VertexClass::I1;
    else
      out.classes[v] = VertexClass::I2;
  }
  return out;
}

namespace {

bool is_base(const OrbitPartition& op, int v) { return op.orbits[op.orbit_of[v]].front() == v; }

}  // namespace

CurveAutomorphism identity_automorphism(const MarkedGraph& g) {
  CurveAutomorphism a;
  a.sigma.resize(g.vertices.size());
  std::iota(a.sigma.begin(), a.sigma.end(), 0);
  a.twist.assign(g.vertices.size(), 0);
  return a;
}

CurveAutomorphism gamma_automorphism(const MarkedGraph& g) {
  const OrbitPartition op = orbit_partition(g);
  CurveAutomorphism a;
  a.sigma = g.gamma_vertex;
  a.twist.assign(g.vertices.size(), 0);
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    if (is_base(op, a.sigma[v]) && g.vertices[v].h_order > 1) a.twist[v] = 1;
  return a;
}

PointRef apply(const MarkedGraph& g, const CurveAutomorphism& a, PointRef p) {
  return {a.sigma.at(p.vertex), shift_slot(g.vertices[p.vertex], p.slot, a.twist[p.vertex])};
}

CurveAutomorphism compose(const MarkedGraph& g, const CurveAutomorphism& a, const CurveAutomorphism& b) {
  CurveAutomorphism c;
  const std::size_t n = g.vertices.size();
  c.sigma.resize(n);
  c.twist.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    const int w = b.sigma[v];
    c.sigma[v] = a.sigma[w];
    c.twist[v] = static_cast<int>(mod(b.twist[v] + a.twist[w], g.vertices[v].h_order));
  }
  return c;
}

CurveAutomorphism inverse(const MarkedGraph& g, const CurveAutomorphism& a) {
  CurveAutomorphism c;
  const std::size_t n = g.vertices.size();
  c.sigma.resize(n);
  c.twist.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    const int w = a.sigma[v];
    c.sigma[w] = static_cast<int>(v);
    c.twist[w] = static_cast<int>(mod(-a.twist[v], g.vertices[v].h_order));
  }
  return c;
}

CurveAutomorphism power(const MarkedGraph& g, const CurveAutomorphism& a, int e) {
  CurveAutomorphism base = e < 0 ? inverse(g, a) : a;
  CurveAutomorphism acc = identity_automorphism(g);
  for (int k = std::abs(e); k > 0; k >>= 1) {
    if (k & 1) acc = compose(g, base, acc);
    base = compose(g, base, base);
  }
  return acc;
}

int automorphism_order(const MarkedGraph& g, const CurveAutomorphism& a) {
  const std::size_t n = g.vertices.size();
  std::vector<char> seen(n, 0);
  std::int64_t order = 1;
  for (std::size_t v = 0; v < n; ++v) {
    if (seen[v]) continue;
    int len = 0;
    std::int64_t twist = 0;
    for (std::size_t w = v; !seen[w]; w = a.sigma[w]) {
      seen[w] = 1;
      ++len;
      twist += a.twist[w];
    }
    order = lcm(order, len * additive_order(twist, g.vertices[v].h_order));
  }
  return static_cast<int>(order);
}

namespace {

std::map<PointRef, std::pair<int, int>> node_point_index(const MarkedGraph& g) {
  std::map<PointRef, std::pair<int, int>> idx;
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    for (int s = 0; s < 2; ++s) {
      const HalfEdge& h = g.edges[e].ends[s];
      idx[{h.vertex, h.slot}] = {static_cast<int>(e), s};
    }
  return idx;
}

// Edge image of every edge under an automorphism, or -1 where the two ends
// do not land on a common edge.
std::vector<int> edge_images(const MarkedGraph& g, const CurveAutomorphism& a,
                             const std::map<PointRef, std::pair<int, int>>& idx) {
  std::vector<int> out(g.edges.size(), -1);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& ends = g.edges[e].ends;
    const PointRef p = apply(g, a, {ends[0].vertex, ends[0].slot});
    const PointRef q = apply(g, a, {ends[1].vertex, ends[1].slot});
    auto ip = idx.find(p);
    auto iq = idx.find(q);
    if (ip == idx.end() || iq == idx.end()) continue;
    if (ip->second.first != iq->second.first || ip->second.second == iq->second.second) continue;
    out[e] = ip->second.first;
  }
  return out;
}

}  // namespace

bool preserves_edges(const MarkedGraph& g, const CurveAutomorphism& a) {
  const auto idx = node_point_index(g);
  const auto img = edge_images(g, a, idx);
  return std::none_of(img.begin(), img.end(), [](int e) { return e < 0; });
}

void finalize_graph(MarkedGraph& g) {
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    EdgeData& ed = g.edges[e];
    for (auto& h : ed.ends) h = make_half_edge(g, h.vertex, h.slot);
    ed.loop = ed.ends[0].vertex == ed.ends[1].vertex;
  }
  const auto idx = node_point_index(g);
  const auto gam = gamma_automorphism(g);
  g.gamma_edge = edge_images(g, gam, idx);
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (g.gamma_edge[e] < 0)
      throw StrataError(Errc::InvalidGraph, "gamma does not map edge " + std::to_string(g.edges[e].id) + " to an edge");
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    int r = 1;
    for (int f = g.gamma_edge[e]; f != static_cast<int>(e); f = g.gamma_edge[f]) ++r;
    EdgeData& ed = g.edges[e];
    ed.stab = g.d / r;
    PointRef p{ed.ends[0].vertex, ed.ends[0].slot};
    for (int i = 0; i < r; ++i) p = apply(g, gam, p);
    ed.swap = p == PointRef{ed.ends[1].vertex, ed.ends[1].slot};
  }
}

bool is_connected(const MarkedGraph& g) {
  const std::size_t n = g.vertices.size();
  if (n == 0) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t comps = n;
  for (const auto& e : g.edges) {
    const int a = find(e.ends[0].vertex), b = find(e.ends[1].vertex);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps == 1;
}

int total_genus(const MarkedGraph& g) {
  if (!is_connected(g)) throw StrataError(Errc::Disconnected, "dual graph is not connected");
  int sum = 0;
  for (const auto& v : g.vertices) sum += v.genus;
  return sum + static_cast<int>(g.edges.size()) - static_cast<int>(g.vertices.size()) + 1;
}

namespace {

struct Checker {
  ValidationReport report;
  void fail(const std::string& where, const std::string& what) { report.issues.push_back({where, what}); }
};

std::string vname(const MarkedGraph& g, int v) { return "vertex " + std::to_string(g.vertices[v].id); }
std::string ename(const MarkedGraph& g, int e) { return "edge " + std::to_string(g.edges[e].id); }

bool check_vertex(const MarkedGraph& g, int i, Checker& c) {
  const VertexData& v = g.vertices[i];
  const std::string w = vname(g, i);
  bool ok = true;
  if (v.genus < 0) c.fail(w, "negative genus"), ok = false;
  if (v.orbit_len < 1 || v.ord_trivial < 1 || v.h_order < 1) {
    c.fail(w, "orbit length, |G''| and d_i must be positive");
    return false;
  }
  if (std::int64_t{v.orbit_len} * v.ord_trivial * v.h_order != g.d) {
    c.fail(w, "n_i * d_i * |G''_i| = " + std::to_string(std::int64_t{v.orbit_len} * v.ord_trivial * v.h_order) +
                  " differs from d = " + std::to_string(g.d));
    ok = false;
  }
  if (v.h_order == 1) {
    if (!v.k.empty()) c.fail(w, "trivial H_i carries no branching sequence"), ok = false;
    if (v.quotient_genus != v.genus) c.fail(w, "quotient genus must equal genus when d_i = 1"), ok = false;
    if (!v.free_slots.empty()) c.fail(w, "free ramification slots without ramification"), ok = false;
    return ok;
  }
  if (static_cast<int>(v.k.size()) != v.h_order - 1) {
    c.fail(w, "branching sequence needs d_i - 1 = " + std::to_string(v.h_order - 1) + " entries");
    return false;
  }
  if (std::any_of(v.k.begin(), v.k.end(), [](int x) { return x < 0; })) {
    c.fail(w, "negative branching count");
    return false;
  }
  const BranchingSequence k = v.branching();
  if (v.genus >= 0 && !is_admissible(v.genus, k)) c.fail(w, "branching sequence " + k.to_string() + " is not admissible for genus " + std::to_string(v.genus)), ok = false;
  if (v.quotient_genus < 0) {
    c.fail(w, "negative quotient genus");
    ok = false;
  } else {
    try {
      if (genus_from_quotient(v.quotient_genus, k) != v.genus)
        c.fail(w, "Riemann-Hurwitz: quotient genus " + std::to_string(v.quotient_genus) + " does not match"), ok = false;
    } catch (const StrataError&) {
      c.fail(w, "Riemann-Hurwitz genus is not integral"), ok = false;
    }
  }
  for (int t : v.free_slots)
    if (t < 1 || t >= v.h_order) c.fail(w, "free slot type " + std::to_string(t) + " out of range"), ok = false;
  return ok;
}

}  // namespace

ValidationReport validate(const MarkedGraph& g) {
  Checker c;
  const int nv = static_cast<int>(g.vertices.size());
  const int ne = static_cast<int>(g.edges.size());
  if (g.d < 1) {
    c.fail("graph", "group order must be positive");
    return c.report;
  }
  if (nv == 0) {
    c.fail("graph", "no vertices");
    return c.report;
  }
  {
    std::set<int> ids;
    for (const auto& v : g.vertices)
      if (!ids.insert(v.id).second) c.fail("vertex " + std::to_string(v.id), "duplicate vertex id");
    ids.clear();
    for (const auto& e : g.edges)
      if (!ids.insert(e.id).second) c.fail("edge " + std::to_string(e.id), "duplicate edge id");
  }
  bool vertices_ok = true;
  for (int i = 0; i < nv; ++i) vertices_ok = check_vertex(g, i, c) && vertices_ok;

  bool perm_ok = static_cast<int>(g.gamma_vertex.size()) == nv;
  if (perm_ok) {
    std::vector<int> sorted = g.gamma_vertex;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < nv; ++i) perm_ok = perm_ok && sorted[i] == i;
  }
  if (!perm_ok) {
    c.fail("gamma_vertex", "not a permutation of the vertices");
    return c.report;
  }
  const OrbitPartition op = orbit_partition(g);
  for (const auto& orbit : op.orbits) {
    const VertexData& b = g.vertices[orbit.front()];
    for (int v : orbit) {
      const VertexData& x = g.vertices[v];
      if (x.orbit_len != static_cast<int>(orbit.size()))
        c.fail(vname(g, v), "n_i = " + std::to_string(x.orbit_len) + " but the gamma-orbit has length " +
                                std::to_string(orbit.size()));
      if (x.genus != b.genus || x.ord_trivial != b.ord_trivial || x.h_order != b.h_order ||
          x.quotient_genus != b.quotient_genus || x.k != b.k) {
        c.fail(vname(g, v), "cover data differs from the rest of its gamma-orbit");
        vertices_ok = false;
      }
      std::vector<int> fa = x.free_slots, fb = b.free_slots;
      std::sort(fa.begin(), fa.end());
      std::sort(fb.begin(), fb.end());
      if (fa != fb) c.fail(vname(g, v), "free ramification slots differ from the rest of its gamma-orbit");
    }
  }
  {
    std::int64_t ord = 1;
    for (const auto& o : op.orbits) ord = lcm(ord, static_cast<std::int64_t>(o.size()));
    if (g.d % ord != 0) c.fail("gamma_vertex", "order does not divide d");
  }

  // Edge ends.
  bool ends_ok = vertices_ok;
  std::map<PointRef, int> used;
  for (int e = 0; e < ne; ++e) {
    const EdgeData& ed = g.edges[e];
    for (int s = 0; s < 2; ++s) {
      const HalfEdge& h = ed.ends[s];
      const std::string w = ename(g, e) + " end " + std::to_string(s);
      if (h.vertex < 0 || h.vertex >= nv) {
        c.fail(w, "vertex index out of range");
        ends_ok = false;
        continue;
      }
      const VertexData& v = g.vertices[h.vertex];
      if (h.slot.type < 0 || h.slot.type >= std::max(v.h_order, 1) || (v.h_order == 1 && h.slot.type != 0)) {
        c.fail(w, "slot type " + std::to_string(h.slot.type) + " out of range");
        ends_ok = false;
        continue;
      }
      if (h.slot.fiber < 0 ||
          (h.slot.type > 0 && vertices_ok &&
           h.slot.fiber >= v.k[h.slot.type - 1] * slot_fiber_size(v, h.slot.type))) {
        c.fail(w, "fiber label " + std::to_string(h.slot.fiber) + " names no branch point");
        ends_ok = false;
        continue;
      }
      auto [it, fresh] = used.emplace(PointRef{h.vertex, h.slot}, e);
      if (!fresh) {
        c.fail(w, "slot already used by " + ename(g, it->second));
        ends_ok = false;
      }
      if (vertices_ok) {
        const int M = full_stabilizer(v, h.slot.type);
        if (h.stab != M) c.fail(w, "stabilizer order " + std::to_string(h.stab) + " differs from slot value " + std::to_string(M));
        if (M < 1 || mod(h.rot, M) != full_rotation(v, h.slot.type))
          c.fail(w, "rotation exponent " + std::to_string(h.rot) + " differs from slot value " +
                        std::to_string(full_rotation(v, h.slot.type)));
        if ((std::int64_t{v.h_order} * v.ord_trivial) % M != 0) c.fail(w, "stabilizer order does not divide d_i * |G''_i|");
        if (std::gcd(h.rot, M) != std::gcd(v.ord_trivial, M))
          c.fail(w, "rotation exponent is not primitive on G_P / G''");
      }
    }
    if (ed.loop != (ed.ends[0].vertex == ed.ends[1].vertex)) c.fail(ename(g, e), "loop flag inconsistent with ends");
  }

  // Ramification slot bookkeeping.
  if (vertices_ok && ends_ok) {
    for (int i = 0; i < nv; ++i) {
      const VertexData& v = g.vertices[i];
      std::map<std::pair<int, int>, int> torsor_use;
      for (const auto& [p, e] : used)
        if (p.vertex == i) ++torsor_use[{p.slot.type, slot_torsor(v, p.slot)}];
      std::map<int, int> full_nodes;
      for (const auto& [key, cnt] : torsor_use) {
        const int fsize = slot_fiber_size(v, key.first);
        if (cnt != fsize) {
          c.fail(vname(g, i), "type " + std::to_string(key.first) + " orbit " + std::to_string(key.second) +
                                  " only partially attached to nodes (" + std::to_string(cnt) + " of " +
                                  std::to_string(fsize) + ")");
        }
        if (key.first > 0) ++full_nodes[key.first];
      }
      for (int t = 1; t < v.h_order; ++t) {
        const int free = static_cast<int>(std::count(v.free_slots.begin(), v.free_slots.end(), t));
        if (free + full_nodes[t] != v.k[t - 1])
          c.fail(vname(g, i), "type " + std::to_string(t) + ": " + std::to_string(full_nodes[t]) +
                                  " node branch points + " + std::to_string(free) + " free slots != k = " +
                                  std::to_string(v.k[t - 1]));
      }
    }
  }

  // Compatibility of gamma with edges.
  if (vertices_ok && ends_ok) {
    MarkedGraph derived = g;
    try {
      finalize_graph(derived);
      if (static_cast<int>(g.gamma_edge.size()) != ne) {
        c.fail("gamma_edge", "must list one image per edge");
      } else {
        for (int e = 0; e < ne; ++e) {
          if (g.gamma_edge[e] != derived.gamma_edge[e])
            c.fail(ename(g, e), "gamma_edge image inconsistent with gamma on node points");
          const EdgeData& a = g.edges[e];
          const EdgeData& b = derived.edges[e];
          if (a.swap != b.swap) c.fail(ename(g, e), b.swap ? "node stabilizer swaps the branches" : "node stabilizer does not swap the branches");
          if (a.stab != b.stab)
            c.fail(ename(g, e), "|G_P| = " + std::to_string(a.stab) + " but the gamma-orbit gives " + std::to_string(b.stab));
          const int M1 = b.ends[0].stab, M2 = b.ends[1].stab;
          const int want = b.swap ? b.stab / 2 : b.stab;
          if (M1 != want || M2 != want || (b.swap && b.stab % 2 != 0))
            c.fail(ename(g, e), "branch stabilizers " + std::to_string(M1) + ", " + std::to_string(M2) +
                                    " inconsistent with |G_P| = " + std::to_string(b.stab) +
                                    (b.swap ? " (swap)" : ""));
          if (b.swap && b.ends[0].rot != b.ends[1].rot) c.fail(ename(g, e), "swapped branches carry different rotations");
        }
      }
    } catch (const StrataError& err) {
      c.fail("gamma", err.what());
    }
  }

  // Stability and global shape.
  std::vector<int> valence(nv, 0);
  for (const auto& e : g.edges)
    for (const auto& h : e.ends)
      if (h.vertex >= 0 && h.vertex < nv) ++valence[h.vertex];
  for (int i = 0; i < nv; ++i)
    if (2 * g.vertices[i].genus - 2 + valence[i] <= 0) c.fail(vname(g, i), "unstable component");
  if (ne == 0) c.fail("graph", "no nodes: the curve is smooth");
  if (!is_connected(g)) {
    c.fail("graph", "dual graph is not connected");
  } else if (total_genus(g) < 2) {
    c.fail("graph", "arithmetic genus below 2");
  }
  return c.report;
}

SubgroupOrders subgroup_invariants(const MarkedGraph& g, int vertex) {
  const VertexData& v = g.vertices.at(vertex);
  SubgroupOrders s;
  s.g_i = g.d / v.orbit_len;
  s.g2_i = v.ord_trivial;
  s.h_i = v.h_order;
  s.g1_i = s.g_i;
  for (const auto& e : g.edges)
    if (e.ends[0].vertex == vertex || e.ends[1].vertex == vertex) s.g1_i = std::gcd(s.g1_i, e.stab);
  s.h1_i = s.g1_i / s.g2_i;
  s.k_v = g.d;
  s.k = g.d;
  for (std::size_t w = 0; w < g.vertices.size(); ++w) {
    const int gw = g.d / g.vertices[w].orbit_len;
    s.k_v = std::gcd(s.k_v, gw);
    int g1 = gw;
    for (const auto& e : g.edges)
      if (e.ends[0].vertex == static_cast<int>(w) || e.ends[1].vertex == static_cast<int>(w)) g1 = std::gcd(g1, e.stab);
    s.k = std::gcd(s.k, g1);
  }
  return s;
}

}  // namespace cyclic
