#include <istream>
#include <map>
#include <ostream>

#include "cyclic/error.hpp"
#include "cyclic/io.hpp"

namespace cyclic {

namespace {

template <class T>
T need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw StrataError(Errc::BadInput, std::string("missing key \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw StrataError(Errc::BadInput, std::string("key \"") + key + "\": " + e.what());
  }
}

MaximalityStatus status_from(const std::string& s) {
  for (auto st : {MaximalityStatus::Maximal, MaximalityStatus::NotMaximal, MaximalityStatus::AssumptionsViolated,
                  MaximalityStatus::AssumptionsUnverifiable})
    if (to_string(st) == s) return st;
  throw StrataError(Errc::BadInput, "unknown verdict " + s);
}

Reason reason_from(const std::string& s) {
  for (auto r : {Reason::CaseA, Reason::CaseB, Reason::CaseC, Reason::ZetaSmoothable})
    if (to_string(r) == s) return r;
  throw StrataError(Errc::BadInput, "unknown reason " + s);
}

}  // namespace

Json graph_to_json(const MarkedGraph& g) {
  Json j;
  j["schema"] = kSchema;
  j["d"] = g.d;
  j["vertices"] = Json::array();
  for (const auto& v : g.vertices)
    j["vertices"].push_back({{"id", v.id},
                             {"g", v.genus},
                             {"n", v.orbit_len},
                             {"ord_trivial", v.ord_trivial},
                             {"d_i", v.h_order},
                             {"h", v.quotient_genus},
                             {"k", v.k},
                             {"free_slots", v.free_slots}});
  j["edges"] = Json::array();
  for (const auto& e : g.edges) {
    Json ends = Json::array();
    for (const auto& h : e.ends)
      ends.push_back({{"vertex", g.vertices.at(h.vertex).id},
                      {"slot_type", h.slot.type},
                      {"fiber", h.slot.fiber},
                      {"rot", h.rot},
                      {"stab", h.stab}});
    j["edges"].push_back({{"id", e.id}, {"ends", ends}, {"loop", e.loop}, {"swap", e.swap}, {"stab", e.stab}});
  }
  j["gamma_vertex"] = Json::array();
  for (int w : g.gamma_vertex) j["gamma_vertex"].push_back(g.vertices.at(w).id);
  j["gamma_edge"] = Json::array();
  for (int f : g.gamma_edge) j["gamma_edge"].push_back(g.edges.at(f).id);
  return j;
}

MarkedGraph graph_from_json(const Json& j) {
  if (!j.is_object()) throw StrataError(Errc::BadInput, "graph must be a JSON object");
  if (j.contains("schema") && j["schema"] != kSchema)
    throw StrataError(Errc::BadInput, "unsupported schema " + j["schema"].dump());
  MarkedGraph g;
  g.d = need<int>(j, "d");
  std::map<int, int> vindex, eindex;
  for (const auto& jv : need<Json>(j, "vertices")) {
    VertexData v;
    v.id = need<int>(jv, "id");
    v.genus = need<int>(jv, "g");
    v.orbit_len = need<int>(jv, "n");
    v.ord_trivial = jv.value("ord_trivial", 1);
    v.h_order = need<int>(jv, "d_i");
    v.quotient_genus = jv.contains("h") ? need<int>(jv, "h") : v.genus;
    v.k = jv.value("k", std::vector<int>{});
    v.free_slots = jv.value("free_slots", std::vector<int>{});
    if (!vindex.emplace(v.id, static_cast<int>(g.vertices.size())).second)
      throw StrataError(Errc::BadInput, "duplicate vertex id " + std::to_string(v.id));
    g.vertices.push_back(std::move(v));
  }
  auto vertex = [&](int id) {
    auto it = vindex.find(id);
    if (it == vindex.end()) throw StrataError(Errc::BadInput, "unknown vertex id " + std::to_string(id));
    return it->second;
  };
  bool derive_ends = false, derive_edges = false;
  for (const auto& je : need<Json>(j, "edges")) {
    EdgeData e;
    e.id = need<int>(je, "id");
    const Json ends = need<Json>(je, "ends");
    if (!ends.is_array() || ends.size() != 2) throw StrataError(Errc::BadInput, "an edge needs two ends");
    for (int s = 0; s < 2; ++s) {
      const Json& h = ends[s];
      e.ends[s].vertex = vertex(need<int>(h, "vertex"));
      e.ends[s].slot = {need<int>(h, "slot_type"), need<int>(h, "fiber")};
      if (h.contains("rot") && h.contains("stab")) {
        e.ends[s].rot = need<int>(h, "rot");
        e.ends[s].stab = need<int>(h, "stab");
      } else {
        derive_ends = true;
      }
    }
    if (je.contains("loop")) e.loop = need<bool>(je, "loop");
    else e.loop = e.ends[0].vertex == e.ends[1].vertex;
    if (je.contains("swap") && je.contains("stab")) {
      e.swap = need<bool>(je, "swap");
      e.stab = need<int>(je, "stab");
    } else {
      derive_edges = true;
    }
    if (!eindex.emplace(e.id, static_cast<int>(g.edges.size())).second)
      throw StrataError(Errc::BadInput, "duplicate edge id " + std::to_string(e.id));
    g.edges.push_back(e);
  }
  for (int id : need<std::vector<int>>(j, "gamma_vertex")) g.gamma_vertex.push_back(vertex(id));
  bool have_gamma_edge = j.contains("gamma_edge");
  if (have_gamma_edge)
    for (int id : need<std::vector<int>>(j, "gamma_edge")) {
      auto it = eindex.find(id);
      if (it == eindex.end()) throw StrataError(Errc::BadInput, "unknown edge id " + std::to_string(id));
      g.gamma_edge.push_back(it->second);
    }
  if (derive_ends || derive_edges || !have_gamma_edge) {
    MarkedGraph full = g;
    try {
      finalize_graph(full);
    } catch (const StrataError&) {
      return g;  // validation reports the inconsistency
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      if (derive_ends) g.edges[e].ends = full.edges[e].ends;
      if (derive_edges) {
        g.edges[e].swap = full.edges[e].swap;
        g.edges[e].stab = full.edges[e].stab;
      }
    }
    if (!have_gamma_edge) g.gamma_edge = full.gamma_edge;
  }
  return g;
}

Json sequence_to_json(int g, const BranchingSequence& k) {
  return {{"d", k.order()}, {"g", g}, {"k", k.counts()}};
}

Json character_report(const MarkedGraph& g) {
  Json out = Json::array();
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const NodeCharacter c = node_character(g, static_cast<int>(e));
    out.push_back({{"edge", g.edges[e].id}, {"m", c.stab_order}, {"exp", c.exponent}, {"swap", c.swap},
                   {"smoothable", c.trivial()}});
  }
  return out;
}

Json dimension_report(const MarkedGraph& g, const StratumDimensionBreakdown& b) {
  Json per = Json::array();
  for (const auto& o : b.per_orbit)
    per.push_back({{"orbit", o.orbit},
                   {"vertex", g.vertices[o.vertex].id},
                   {"class", std::string(to_string(o.cls))},
                   {"genus_used", o.base_genus},
                   {"r", o.marked},
                   {"dimension", o.contribution}});
  return {{"per_orbit", per}, {"total", b.total}};
}

Json automorphism_to_json(const MarkedGraph& g, const CurveAutomorphism& a) {
  const OrbitPartition op = orbit_partition(g);
  Json orbits = Json::array();
  for (const auto& o : op.orbits) {
    Json sigma = Json::object(), twist = Json::object();
    for (int v : o) {
      sigma[std::to_string(g.vertices[v].id)] = g.vertices[a.sigma[v]].id;
      twist[std::to_string(g.vertices[v].id)] = a.twist[v];
    }
    orbits.push_back({{"sigma", sigma}, {"twist", twist}});
  }
  return {{"orbits", orbits}, {"order", automorphism_order(g, a)}};
}

Json verdict_to_json(const MarkedGraph& g, const MaximalityVerdict& v) {
  Json j;
  j["status"] = std::string(to_string(v.status));
  j["reason"] = v.reason ? Json(std::string(to_string(*v.reason))) : Json(nullptr);
  j["witness"] = v.witness ? automorphism_to_json(g, *v.witness) : Json(nullptr);
  j["detail"] = v.detail;
  Json a;
  a["nonsmoothable"] = v.assumptions.nonsmoothable_ok;
  a["vertices"] = Json::array();
  for (const auto& x : v.assumptions.vertices)
    a["vertices"].push_back({{"vertex", g.vertices[x.vertex].id},
                             {"fullness", std::string(to_string(x.fullness))},
                             {"note", x.fullness_note},
                             {"positive_dim", x.positive_dim}});
  j["assumptions"] = a;
  if (v.witness && v.reason && *v.reason == Reason::ZetaSmoothable) {
    Json z = Json::array();
    for (const auto& d : zeta_diagnostics(g, *v.witness))
      if (d.applies) z.push_back({{"edge", g.edges[d.edge].id}, {"m", d.m}, {"exp", d.exponent}});
    j["zeta"] = z;
  }
  return j;
}

Json presentation_to_json(const ExtPresentation& p) {
  return {{"d", p.d}, {"l1", p.l1}, {"l2", p.l2}, {"e12", p.e12}, {"f", p.f}};
}

Json entry_to_json(const CensusEntry& e) {
  Json j;
  j["type"] = to_hex(e.encoding);
  j["genus"] = e.genus;
  j["dimension"] = e.dimension;
  j["nonsmoothable"] = e.nonsmoothable;
  j["verdict"] = std::string(to_string(e.verdict));
  j["reason"] = e.reason ? Json(std::string(to_string(*e.reason))) : Json(nullptr);
  j["witness"] = e.witness_summary;
  return j;
}

CensusEntry entry_from_json(const Json& j) {
  CensusEntry e;
  e.encoding = from_hex(need<std::string>(j, "type"));
  e.genus = need<int>(j, "genus");
  e.dimension = need<int>(j, "dimension");
  e.nonsmoothable = need<bool>(j, "nonsmoothable");
  e.verdict = status_from(need<std::string>(j, "verdict"));
  if (j.contains("reason") && !j["reason"].is_null()) e.reason = reason_from(need<std::string>(j, "reason"));
  e.witness_summary = j.value("witness", std::string{});
  return e;
}

void write_census(std::ostream& os, const CensusResult& r) {
  Json h;
  h["schema"] = kSchema;
  h["g"] = r.g;
  h["d"] = r.d;
  h["max_vertices"] = r.limits.max_vertices;
  h["max_edges"] = r.limits.max_edges;
  h["complete"] = r.complete;
  h["entries"] = r.entries.size();
  os << h.dump() << '\n';
  for (const auto& e : r.entries) os << entry_to_json(e).dump() << '\n';
}

CensusResult read_census(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw StrataError(Errc::BadInput, "empty census file");
  Json h;
  try {
    h = Json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw StrataError(Errc::BadInput, std::string("census header: ") + e.what());
  }
  if (h.value("schema", std::string{}) != kSchema) throw StrataError(Errc::BadInput, "census header has wrong schema");
  CensusResult r;
  r.g = need<int>(h, "g");
  r.d = need<int>(h, "d");
  r.limits.max_vertices = need<int>(h, "max_vertices");
  r.limits.max_edges = need<int>(h, "max_edges");
  r.complete = need<bool>(h, "complete");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    try {
      r.entries.push_back(entry_from_json(Json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw StrataError(Errc::BadInput, std::string("census line: ") + e.what());
    }
  }
  return r;
}

}  // namespace cyclic
