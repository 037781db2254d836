#include <algorithm>
#include <map>
#include <tuple>

#include "cyclic/arith.hpp"
#include "cyclic/error.hpp"
#include "cyclic/maximality.hpp"

namespace cyclic {

namespace {

// How the old slots of one sigma-cycle look in the new coordinates.
struct NewOrbit {
  std::vector<int> copies;      // v_0 = smallest index, v_{j+1} = sigma(v_j)
  std::vector<std::int64_t> s;  // partial twist sums S_j
  int h_order = 1;              // d'
  std::int64_t eta = 0;         // generator of the new H as a power of the old one
  // (old type, old torsor, split orbit) -> new slot start (type, branch/orbit index)
  std::map<std::tuple<int, int, int>, std::pair<int, int>> remap;
  std::vector<int> k;
  std::vector<int> free_slots;
  int next_free = 0;
};

}  // namespace

MarkedGraph materialize(const MarkedGraph& g, const CurveAutomorphism& beta) {
  if (automorphism_order(g, beta) != g.d)
    throw StrataError(Errc::PreconditionViolated, "beta does not have order d");
  const int nv = static_cast<int>(g.vertices.size());
  std::vector<int> orbit_of(nv, -1);
  std::vector<NewOrbit> orbits;
  for (int v = 0; v < nv; ++v) {
    if (orbit_of[v] >= 0) continue;
    NewOrbit no;
    std::int64_t sum = 0;
    for (int w = v; orbit_of[w] < 0; w = beta.sigma[w]) {
      orbit_of[w] = static_cast<int>(orbits.size());
      no.copies.push_back(w);
      no.s.push_back(sum);
      sum += beta.twist[w];
    }
    const int hd = std::max(g.vertices[v].h_order, 1);
    no.eta = mod(sum, hd);
    no.h_order = static_cast<int>(hd / gcd(no.eta, hd));
    orbits.push_back(std::move(no));
  }

  // Attached old torsors per vertex orbit.
  std::map<std::pair<int, std::pair<int, int>>, bool> attached;  // (vertex, (type, torsor))
  for (const auto& e : g.edges)
    for (const auto& h : e.ends) attached[{h.vertex, {h.slot.type, slot_torsor(g.vertices[h.vertex], h.slot)}}] = true;

  MarkedGraph out;
  out.d = g.d;
  out.vertices.resize(nv);
  out.gamma_vertex = beta.sigma;
  for (auto& no : orbits) {
    const VertexData& old = g.vertices[no.copies.front()];
    no.k.assign(std::max(no.h_order - 1, 0), 0);
    std::map<int, int> branch_count;  // new type -> allocated branch points
    auto visit = [&](int type, int torsor, bool is_attached) {
      const auto parts = split_fiber(std::max(old.h_order, 1), type, no.eta);
      for (std::size_t p = 0; p < parts.size(); ++p) {
        const int nt = no.h_order > 1 ? parts[p].new_type : 0;
        if (nt == 0) {
          if (is_attached) no.remap[{type, torsor, static_cast<int>(p)}] = {0, no.next_free++};
          continue;
        }
        const int b = branch_count[nt]++;
        ++no.k[nt - 1];
        if (is_attached)
          no.remap[{type, torsor, static_cast<int>(p)}] = {nt, b};
        else
          no.free_slots.push_back(nt);
      }
    };
    for (int l = 1; l < old.h_order; ++l)
      for (int b = 0; b < old.k[l - 1]; ++b) visit(l, b, attached.count({no.copies.front(), {l, b}}) > 0);
    std::vector<int> free_torsors;
    for (const auto& [key, _] : attached)
      if (key.first == no.copies.front() && key.second.first == 0) free_torsors.push_back(key.second.second);
    for (int t : free_torsors) visit(0, t, true);
    std::sort(no.free_slots.begin(), no.free_slots.end());

    const int n_new = static_cast<int>(no.copies.size());
    for (int v : no.copies) {
      VertexData nvd;
      nvd.id = g.vertices[v].id;
      nvd.genus = old.genus;
      nvd.orbit_len = n_new;
      nvd.h_order = no.h_order;
      nvd.ord_trivial = g.d / (n_new * no.h_order);
      nvd.k = no.k;
      nvd.free_slots = no.free_slots;
      nvd.quotient_genus =
          no.h_order > 1 ? static_cast<int>(boost::rational_cast<std::int64_t>(quotient_genus(old.genus, {no.h_order, no.k})))
                         : old.genus;
      out.vertices[v] = std::move(nvd);
    }
  }

  auto convert = [&](const HalfEdge& h) {
    const NewOrbit& no = orbits[orbit_of[h.vertex]];
    const VertexData& old = g.vertices[h.vertex];
    const int j = static_cast<int>(std::find(no.copies.begin(), no.copies.end(), h.vertex) - no.copies.begin());
    const Slot s = shift_slot(old, h.slot, -no.s[j]);
    const int fsize = slot_fiber_size(old, s.type);
    const int torsor = s.fiber / fsize;
    const int f = s.fiber % fsize;
    const auto parts = split_fiber(std::max(old.h_order, 1), s.type, no.eta);
    const std::int64_t step = mod(no.eta, fsize);
    for (std::size_t p = 0; p < parts.size(); ++p) {
      std::int64_t x = parts[p].start;
      for (int pos = 0; pos < parts[p].size; ++pos, x = mod(x + step, fsize)) {
        if (x != f) continue;
        const auto [nt, idx] = no.remap.at({s.type, torsor, static_cast<int>(p)});
        const int nf = nt == 0 ? no.h_order : parts[p].size;
        return HalfEdge{h.vertex, Slot{nt, idx * nf + pos}, 0, 1};
      }
    }
    throw StrataError(Errc::InvalidGraph, "point outside its fiber");
  };
  for (const auto& e : g.edges) out.edges.push_back({e.id, {convert(e.ends[0]), convert(e.ends[1])}});
  finalize_graph(out);
  return out;
}

}  // namespace cyclic
