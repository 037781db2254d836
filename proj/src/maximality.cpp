#include "cyclic/maximality.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "cyclic/arith.hpp"
#include "cyclic/deformation.hpp"
#include "cyclic/error.hpp"

namespace cyclic {

std::string_view to_string(Fullness f) {
  switch (f) {
    case Fullness::Verified: return "verified";
    case Fullness::Violated: return "violated";
    case Fullness::Unverifiable: return "unverifiable";
  }
  return "?";
}

std::string_view to_string(Reason r) {
  switch (r) {
    case Reason::CaseA: return "case_a";
    case Reason::CaseB: return "case_b";
    case Reason::CaseC: return "case_c";
    case Reason::ZetaSmoothable: return "zeta_smoothable";
  }
  return "?";
}

std::string_view to_string(MaximalityStatus s) {
  switch (s) {
    case MaximalityStatus::Maximal: return "maximal";
    case MaximalityStatus::NotMaximal: return "not_maximal";
    case MaximalityStatus::AssumptionsViolated: return "assumptions_violated";
    case MaximalityStatus::AssumptionsUnverifiable: return "assumptions_unverifiable";
  }
  return "?";
}

bool AssumptionReport::any_violated() const {
  if (!nonsmoothable_ok) return true;
  return std::any_of(vertices.begin(), vertices.end(),
                     [](const auto& v) { return v.fullness == Fullness::Violated || !v.positive_dim; });
}

bool AssumptionReport::any_unverifiable() const {
  return std::any_of(vertices.begin(), vertices.end(),
                     [](const auto& v) { return v.fullness == Fullness::Unverifiable; });
}

namespace {

void set_note(std::string* note, std::string text) {
  if (note) *note = std::move(text);
}

// Index-2 restrictions of the two exceptional shapes for Z/(2 d').
bool restricts_from_exceptional(int genus, const BranchingSequence& k) {
  const int dp = k.order();
  const int big = 2 * dp;
  std::vector<int> base(big - 1, 0);
  if (dp % 2 == 0) {
    base[0] += 1;
    base[dp - 1] += 2;
    base[big - 2] += 1;
  } else if (dp >= 3) {
    base[1] += 1;
    base[dp - 1] += 2;
    base[big - 3] += 1;
  } else {
    return false;
  }
  const BranchingSequence shape(big, base);
  const NumericalTypeClass target = canonicalize(k);
  for (int u : units(big)) {
    const BranchingSequence kk = unit_act(u, shape);
    int g;
    try {
      g = genus_from_quotient(0, kk);
    } catch (const StrataError&) {
      continue;
    }
    if (g != genus || !is_admissible(g, kk)) continue;
    const BranchingSequence r = induced_sequence(kk, 2);
    if (canonicalize(r) != target) continue;
    if (cover_shape(g, kk).dim == cover_shape(genus, k).dim) return true;
  }
  return false;
}

}  // namespace

Fullness fullness_oracle(int genus, int h_order, const std::vector<int>& k, std::string* note) {
  if (genus < 2) {
    set_note(note, "genus below 2");
    return Fullness::Violated;
  }
  if (h_order <= 1) {
    if (genus == 2) {
      set_note(note, "every genus-2 curve has the hyperelliptic involution");
      return Fullness::Violated;
    }
    set_note(note, "general curve of genus >= 3 has no automorphisms");
    return Fullness::Verified;
  }
  const BranchingSequence seq(h_order, k);
  const int h = static_cast<int>(boost::rational_cast<std::int64_t>(quotient_genus(genus, seq)));
  const int r = seq.total();
  if (genus == 2) {
    if (h_order % 2 != 0 || quotient_genus(2, induced_sequence(seq, h_order / 2)) != Rational(0)) {
      set_note(note, "H misses the hyperelliptic involution");
      return Fullness::Violated;
    }
  }
  if (restricts_from_exceptional(genus, seq)) {
    set_note(note, "general member is an index-2 restriction of a larger cyclic action");
    return Fullness::Violated;
  }
  static const std::pair<int, int> small[] = {{0, 3}, {0, 4}, {1, 1}, {1, 2}, {2, 0}};
  for (auto [sh, sr] : small)
    if (h == sh && r == sr) {
      set_note(note, "signature admits non-maximal Fuchsian groups");
      return Fullness::Unverifiable;
    }
  set_note(note, "signature is finitely maximal");
  return Fullness::Verified;
}

AssumptionReport check_assumptions(const MarkedGraph& g) {
  AssumptionReport rep;
  rep.nonsmoothable_ok = is_equivariantly_nonsmoothable(g);
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const VertexData& v = g.vertices[i];
    VertexAssumptions va;
    va.vertex = static_cast<int>(i);
    va.fullness = fullness_oracle(v.genus, v.h_order, v.k, &va.fullness_note);
    try {
      const int base = v.h_order > 1 ? v.quotient_genus : v.genus;
      va.positive_dim = teich_dimension(base, marked_points(g, static_cast<int>(i))) > 0;
    } catch (const StrataError&) {
      va.positive_dim = false;
    }
    rep.vertices.push_back(std::move(va));
  }
  return rep;
}

std::vector<CurveAutomorphism> model_automorphisms(const MarkedGraph& g) {
  const int nv = static_cast<int>(g.vertices.size());
  const OrbitPartition op = orbit_partition(g);
  std::vector<int> order;
  for (const auto& o : op.orbits) order.insert(order.end(), o.begin(), o.end());
  std::vector<int> rank(nv);
  for (int i = 0; i < nv; ++i) rank[order[i]] = i;

  std::map<PointRef, std::pair<int, int>> idx;
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    for (int s = 0; s < 2; ++s) idx[{g.edges[e].ends[s].vertex, g.edges[e].ends[s].slot}] = {static_cast<int>(e), s};
  // Edges become checkable once both end vertices are assigned.
  std::vector<std::vector<int>> ready(nv);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const int r = std::max(rank[g.edges[e].ends[0].vertex], rank[g.edges[e].ends[1].vertex]);
    ready[r].push_back(static_cast<int>(e));
  }

  CurveAutomorphism cur = identity_automorphism(g);
  std::vector<char> taken(nv, 0);
  std::vector<CurveAutomorphism> out;
  constexpr std::size_t kCap = 2'000'000;

  auto edge_ok = [&](int e) {
    const auto& ends = g.edges[e].ends;
    const PointRef p = apply(g, cur, {ends[0].vertex, ends[0].slot});
    const PointRef q = apply(g, cur, {ends[1].vertex, ends[1].slot});
    auto ip = idx.find(p), iq = idx.find(q);
    return ip != idx.end() && iq != idx.end() && ip->second.first == iq->second.first &&
           ip->second.second != iq->second.second;
  };

  std::function<void(int)> rec = [&](int i) {
    if (i == nv) {
      if (out.size() >= kCap) throw StrataError(Errc::ScaleExceeded, "automorphism group too large");
      out.push_back(cur);
      return;
    }
    const int v = order[i];
    const auto& orbit = op.orbits[op.orbit_of[v]];
    const int hd = std::max(g.vertices[v].h_order, 1);
    for (int w : orbit) {
      if (taken[w]) continue;
      taken[w] = 1;
      cur.sigma[v] = w;
      for (int t = 0; t < hd; ++t) {
        cur.twist[v] = t;
        bool ok = true;
        for (int e : ready[i])
          if (!edge_ok(e)) {
            ok = false;
            break;
          }
        if (ok) rec(i + 1);
      }
      cur.twist[v] = 0;
      cur.sigma[v] = v;
      taken[w] = 0;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CurveAutomorphism> automorphism_group(const MarkedGraph& g) {
  const AssumptionReport rep = check_assumptions(g);
  if (rep.any_violated()) throw StrataError(Errc::AssumptionsViolated, "assumptions of the maximality criterion fail");
  return model_automorphisms(g);
}

std::vector<CurveAutomorphism> elements_of_order_d(const MarkedGraph& g, const std::vector<CurveAutomorphism>& auts,
                                                   int d) {
  std::vector<CurveAutomorphism> out;
  for (const auto& a : auts)
    if (automorphism_order(g, a) == d) out.push_back(a);
  return out;
}

std::vector<int> cycle_counts(const MarkedGraph& g, const CurveAutomorphism& beta) {
  const OrbitPartition op = orbit_partition(g);
  std::vector<int> out;
  for (const auto& o : op.orbits) {
    std::vector<char> seen(g.vertices.size(), 0);
    int cycles = 0;
    for (int v : o) {
      if (seen[v]) continue;
      ++cycles;
      for (int w = v; !seen[w]; w = beta.sigma[w]) seen[w] = 1;
    }
    out.push_back(cycles);
  }
  return out;
}

std::vector<int> orbit_exponents(const MarkedGraph& g, const CurveAutomorphism& beta) {
  const OrbitPartition op = orbit_partition(g);
  std::vector<int> out;
  for (const auto& o : op.orbits) {
    const int v0 = o.front();
    const int hd = std::max(g.vertices[v0].h_order, 1);
    std::int64_t t = 0;
    int w = v0;
    do {
      t += beta.twist[w];
      w = beta.sigma[w];
    } while (w != v0);
    out.push_back(static_cast<int>(mod(t, hd)));
  }
  return out;
}

std::optional<Reason> case1_test(const MarkedGraph& g, const CurveAutomorphism& beta) {
  const auto mu = cycle_counts(g, beta);
  if (std::any_of(mu.begin(), mu.end(), [](int m) { return m > 1; })) return Reason::CaseA;
  const OrbitPartition op = orbit_partition(g);
  const auto c = orbit_exponents(g, beta);
  for (std::size_t o = 0; o < op.orbits.size(); ++o) {
    const int hd = g.vertices[op.orbits[o].front()].h_order;
    if (hd > 1 && 3 * additive_order(c[o], hd) <= hd) return Reason::CaseB;
  }
  for (std::size_t o = 0; o < op.orbits.size(); ++o) {
    const VertexData& v = g.vertices[op.orbits[o].front()];
    if (v.h_order > 1 && 2 * additive_order(c[o], v.h_order) == v.h_order &&
        !exceptional_reduction(v.branching()))
      return Reason::CaseC;
  }
  return std::nullopt;
}

std::vector<ZetaDiagnostic> zeta_diagnostics(const MarkedGraph& g, const CurveAutomorphism& beta) {
  const OrbitPartition op = orbit_partition(g);
  const auto c = orbit_exponents(g, beta);
  std::vector<ZetaDiagnostic> out;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const EdgeData& ed = g.edges[e];
    ZetaDiagnostic z;
    z.edge = static_cast<int>(e);
    z.m = ed.stab;
    z.applies = !ed.loop && !ed.swap;
    if (z.applies) {
      const std::int64_t c1 = c[op.orbit_of[ed.ends[0].vertex]], c2 = c[op.orbit_of[ed.ends[1].vertex]];
      z.exponent = static_cast<int>(mod(ed.ends[0].rot * c1 + ed.ends[1].rot * c2, ed.stab));
    }
    out.push_back(z);
  }
  return out;
}

bool zeta_condition(const MarkedGraph& g, const CurveAutomorphism& beta) {
  if (auto r = case1_test(g, beta))
    throw StrataError(Errc::PreconditionViolated, "case 1 applies (" + std::string(to_string(*r)) + ")");
  for (const auto& z : zeta_diagnostics(g, beta))
    if (z.applies && z.exponent == 0) return false;
  return true;
}

namespace {

std::string describe(const MarkedGraph& g, const CurveAutomorphism& b) {
  std::string s = "sigma=[";
  for (std::size_t v = 0; v < b.sigma.size(); ++v) s += (v ? "," : "") + std::to_string(g.vertices[b.sigma[v]].id);
  s += "] twist=[";
  for (std::size_t v = 0; v < b.twist.size(); ++v) s += (v ? "," : "") + std::to_string(b.twist[v]);
  return s + "]";
}

}  // namespace

MaximalityVerdict is_maximal(const MarkedGraph& g) {
  MaximalityVerdict out;
  out.assumptions = check_assumptions(g);
  const auto& rep = out.assumptions;
  if (rep.any_violated()) {
    out.status = MaximalityStatus::AssumptionsViolated;
    if (!rep.nonsmoothable_ok) out.detail.push_back("(0) some node orbit is equivariantly smoothable");
    for (const auto& v : rep.vertices) {
      const std::string w = "vertex " + std::to_string(g.vertices[v.vertex].id);
      if (v.fullness == Fullness::Violated) out.detail.push_back("(1) " + w + ": " + v.fullness_note);
      if (!v.positive_dim) out.detail.push_back("(2) " + w + ": rigid family");
    }
    return out;
  }
  if (rep.any_unverifiable()) {
    out.status = MaximalityStatus::AssumptionsUnverifiable;
    for (const auto& v : rep.vertices)
      if (v.fullness == Fullness::Unverifiable)
        out.detail.push_back("(1) vertex " + std::to_string(g.vertices[v.vertex].id) + ": " + v.fullness_note);
    return out;
  }
  const auto betas = elements_of_order_d(g, model_automorphisms(g), g.d);
  for (const auto& b : betas)
    if (auto r = case1_test(g, b)) {
      out.status = MaximalityStatus::NotMaximal;
      out.witness = b;
      out.reason = r;
      out.detail.push_back(describe(g, b));
      const auto mu = cycle_counts(g, b);
      const auto c = orbit_exponents(g, b);
      for (std::size_t o = 0; o < mu.size(); ++o)
        out.detail.push_back("orbit " + std::to_string(o) + ": mu=" + std::to_string(mu[o]) +
                             " c=" + std::to_string(c[o]));
      return out;
    }
  for (const auto& b : betas)
    if (!zeta_condition(g, b)) {
      out.status = MaximalityStatus::NotMaximal;
      out.witness = b;
      out.reason = Reason::ZetaSmoothable;
      out.detail.push_back(describe(g, b));
      for (const auto& z : zeta_diagnostics(g, b))
        if (z.applies && z.exponent == 0)
          out.detail.push_back("edge " + std::to_string(g.edges[z.edge].id) + ": exponent 0 mod " +
                               std::to_string(z.m));
      return out;
    }
  out.status = MaximalityStatus::Maximal;
  out.detail.push_back(std::to_string(betas.size()) + " elements of order " + std::to_string(g.d) + " checked");
  return out;
}

}  // namespace cyclic
