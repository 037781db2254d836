// cyclic-strata: command line front end.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cyclic/branching.hpp"
#include "cyclic/census.hpp"
#include "cyclic/deformation.hpp"
#include "cyclic/error.hpp"
#include "cyclic/group_ext.hpp"
#include "cyclic/io.hpp"
#include "cyclic/marked_graph.hpp"
#include "cyclic/maximality.hpp"

using namespace cyclic;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitScale = 3;

struct Options {
  bool json = false;
  std::string out;
  int threads = 1;
  int limit_vertices = 0;
  int limit_edges = 0;
  std::string file;
  int genus = 2;
  int order = 2;
  int sub = 0;
  std::vector<int> k;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw StrataError(Errc::BadInput, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

Json read_json(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw StrataError(Errc::BadInput, "cannot read " + path);
    buf << in.rdbuf();
  }
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw StrataError(Errc::BadInput, std::string("invalid JSON: ") + e.what());
  }
}

// Loads a graph and stops with exit code 2 unless it validates.
MarkedGraph load_valid(const Options& o, Output& out) {
  const MarkedGraph g = graph_from_json(read_json(o.file));
  const ValidationReport rep = validate(g);
  if (!rep.ok()) {
    if (o.json) {
      Json j = {{"valid", false}, {"issues", Json::array()}};
      for (const auto& i : rep.issues) j["issues"].push_back({{"location", i.location}, {"message", i.message}});
      out.stream() << j.dump(2) << '\n';
    } else {
      out.stream() << "invalid graph\n" << rep.summary();
    }
    std::exit(kExitValidation);
  }
  return g;
}

int cmd_admissible(const Options& o, Output& out) {
  const auto classes = enumerate_admissible(o.genus, o.order);
  if (o.json) {
    Json j = Json::array();
    for (const auto& c : classes) {
      const CoverShape s = cover_shape(o.genus, c.representative);
      Json e = sequence_to_json(o.genus, c.representative);
      e["h"] = s.h;
      e["k_sum"] = s.k_sum;
      e["dimension"] = s.dim;
      e["orbit_size"] = c.orbit_size;
      j.push_back(e);
    }
    out.stream() << j.dump(2) << '\n';
  } else {
    out.stream() << classes.size() << " admissible classes for g=" << o.genus << ", d=" << o.order << '\n';
    for (const auto& c : classes) {
      const CoverShape s = cover_shape(o.genus, c.representative);
      out.stream() << "  " << c.representative.to_string() << "  h=" << s.h << " dim=" << s.dim
                   << " orbit=" << c.orbit_size << '\n';
    }
  }
  return 0;
}

int cmd_validate(const Options& o, Output& out) {
  const MarkedGraph g = load_valid(o, out);
  const int genus = total_genus(g);
  if (o.json)
    out.stream() << Json{{"valid", true}, {"genus", genus}, {"type", to_hex(canonical_numerical_type(g))}}.dump(2)
                 << '\n';
  else
    out.stream() << "valid, genus " << genus << '\n';
  return 0;
}

int cmd_smoothable(const Options& o, Output& out) {
  const MarkedGraph g = load_valid(o, out);
  const Json chars = character_report(g);
  const bool ns = is_equivariantly_nonsmoothable(g);
  if (o.json) {
    out.stream() << Json{{"edges", chars}, {"nonsmoothable", ns}}.dump(2) << '\n';
  } else {
    for (const auto& c : chars)
      out.stream() << "edge " << c["edge"] << ": exponent " << c["exp"] << " mod " << c["m"]
                   << (c["swap"].get<bool>() ? " (swap)" : "")
                   << (c["smoothable"].get<bool>() ? " smoothable" : " obstructed") << '\n';
    out.stream() << (ns ? "equivariantly non-smoothable\n" : "some node orbit smooths\n");
  }
  return 0;
}

int cmd_stratum_dim(const Options& o, Output& out) {
  const MarkedGraph g = load_valid(o, out);
  const auto b = stratum_dimension(g);
  if (o.json) {
    out.stream() << dimension_report(g, b).dump(2) << '\n';
  } else {
    for (const auto& x : b.per_orbit)
      out.stream() << "orbit of vertex " << g.vertices[x.vertex].id << " (" << to_string(x.cls)
                   << "): dim T(" << x.base_genus << "," << x.marked << ") = " << x.contribution << '\n';
    out.stream() << "total " << b.total << '\n';
  }
  return 0;
}

int cmd_maximal(const Options& o, Output& out) {
  const MarkedGraph g = load_valid(o, out);
  const auto v = is_maximal(g);
  if (o.json) {
    out.stream() << verdict_to_json(g, v).dump(2) << '\n';
  } else {
    out.stream() << to_string(v.status);
    if (v.reason) out.stream() << " (" << to_string(*v.reason) << ")";
    out.stream() << '\n';
    for (const auto& line : v.detail) out.stream() << "  " << line << '\n';
  }
  return 0;
}

int cmd_restrict(const Options& o, Output& out) {
  const BranchingSequence k(o.order, o.k);
  const BranchingSequence r = restrict_to_subgroup(o.genus, k, o.sub);
  const auto ex = exceptional_reduction(k);
  if (o.json) {
    Json j = sequence_to_json(o.genus, r);
    j["dimension_before"] = cover_shape(o.genus, k).dim;
    j["dimension_after"] = cover_shape(o.genus, r).dim;
    if (ex) j["exceptional"] = {{"sub_order", ex->sub_order}, {"shape", ex->shape}, {"listed", ex->expected.counts()}};
    out.stream() << j.dump(2) << '\n';
  } else {
    out.stream() << r.to_string() << "  dim " << cover_shape(o.genus, k).dim << " -> "
                 << cover_shape(o.genus, r).dim << '\n';
    if (ex) out.stream() << "exceptional shape " << ex->shape << ", listed " << ex->expected.to_string() << '\n';
  }
  return 0;
}

int cmd_extensions(const Options& o, Output& out) {
  Json j = Json::array();
  for (const auto& p : enumerate_presentations(o.order)) {
    Json e = presentation_to_json(p);
    try {
      e["group_order"] = build_group(p).order;
      e["verified"] = true;
    } catch (const StrataError& err) {
      e["verified"] = false;
      e["error"] = err.what();
    }
    j.push_back(e);
  }
  if (o.json) {
    out.stream() << j.dump(2) << '\n';
  } else {
    for (const auto& e : j)
      out.stream() << "(l1,l2,e12,f) = (" << e["l1"] << "," << e["l2"] << "," << e["e12"] << "," << e["f"] << ")  "
                   << (e["verified"].get<bool>() ? "order " + e["group_order"].dump() : "FAILED") << '\n';
  }
  return 0;
}

CensusResult run_census(const Options& o) {
  const CensusLimits limits{o.limit_vertices, o.limit_edges};
  const char* dir = std::getenv("CYCLIC_STRATA_CACHE_DIR");
  std::filesystem::path cache;
  if (dir && *dir) {
    cache = std::filesystem::path(dir) / ("census-g" + std::to_string(o.genus) + "-d" + std::to_string(o.order) +
                                          "-v" + std::to_string(o.limit_vertices) + "-e" +
                                          std::to_string(o.limit_edges) + ".jsonl");
    std::ifstream in(cache);
    if (in) return read_census(in);
  }
  CensusResult r = enumerate_strata(o.genus, o.order, limits, o.threads);
  if (!cache.empty()) {
    std::filesystem::create_directories(cache.parent_path());
    std::ofstream os(cache);
    write_census(os, r);
  }
  return r;
}

int cmd_census(const Options& o, Output& out) {
  const CensusResult r = run_census(o);
  write_census(out.stream(), r);
  if (!r.complete) {
    std::cerr << "census truncated by the vertex/edge limits\n";
    return kExitScale;
  }
  return 0;
}

int cmd_components(const Options& o, Output& out) {
  const CensusResult r = run_census(o);
  const ComponentList c = components(r);
  if (o.json) {
    Json j;
    j["schema"] = kSchema;
    j["g"] = r.g;
    j["d"] = r.d;
    j["complete"] = r.complete;
    j["maximal"] = Json::array();
    for (const auto& e : c.maximal) j["maximal"].push_back(entry_to_json(e));
    j["unverifiable"] = Json::array();
    for (const auto& e : c.unverifiable) j["unverifiable"].push_back(entry_to_json(e));
    out.stream() << j.dump(2) << '\n';
  } else {
    out.stream() << c.maximal.size() << " maximal strata, " << c.unverifiable.size() << " unverifiable\n";
    for (const auto& e : c.maximal) out.stream() << "  " << to_hex(e.encoding) << "  dim " << e.dimension << '\n';
    if (!c.unverifiable.empty()) out.stream() << "unverifiable:\n";
    for (const auto& e : c.unverifiable) out.stream() << "  " << to_hex(e.encoding) << "  dim " << e.dimension << '\n';
  }
  if (!r.complete) {
    std::cerr << "census truncated by the vertex/edge limits\n";
    return kExitScale;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision engine for cyclic group actions on stable curves"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_flag("--json", o.json, "JSON output");
    c->add_option("--out", o.out, "write output to FILE");
  };
  auto graph_cmd = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("file", o.file, "graph JSON (- for stdin)")->required();
    common(c);
    return c;
  };
  auto census_opts = [&](CLI::App* c) {
    c->add_option("--genus,-g", o.genus, "arithmetic genus")->required();
    c->add_option("--order,-d", o.order, "group order")->required();
    c->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
    c->add_option("--limit-vertices", o.limit_vertices, "maximum number of components");
    c->add_option("--limit-edges", o.limit_edges, "maximum number of nodes");
    common(c);
  };

  auto* adm = app.add_subcommand("admissible", "admissible numerical types of smooth covers");
  adm->add_option("--genus,-g", o.genus, "genus")->required();
  adm->add_option("--order,-d", o.order, "group order")->required();
  common(adm);
  auto* val = graph_cmd("validate", "check a marked graph");
  auto* smo = graph_cmd("smoothable", "node characters and equivariant smoothability");
  auto* dim = graph_cmd("stratum-dim", "dimension of the stratum");
  auto* mx = graph_cmd("maximal", "maximality verdict");
  auto* res = app.add_subcommand("restrict", "branching sequence of a subgroup");
  res->add_option("--genus,-g", o.genus, "genus")->required();
  res->add_option("--order,-d", o.order, "group order")->required();
  res->add_option("--k", o.k, "branching sequence")->required()->delimiter(',');
  res->add_option("--sub", o.sub, "order of the subgroup")->required();
  common(res);
  auto* ext = app.add_subcommand("extensions", "extension presentations with (Z/2)^2 quotient");
  ext->add_option("--order,-d", o.order, "order of the cyclic normal subgroup")->required();
  common(ext);
  auto* cen = app.add_subcommand("census", "all non-smoothable strata (JSON Lines)");
  census_opts(cen);
  auto* comp = app.add_subcommand("components", "maximal strata");
  census_opts(comp);

  CLI11_PARSE(app, argc, argv);
  try {
    Output out(o.out);
    if (adm->parsed()) return cmd_admissible(o, out);
    if (val->parsed()) return cmd_validate(o, out);
    if (smo->parsed()) return cmd_smoothable(o, out);
    if (dim->parsed()) return cmd_stratum_dim(o, out);
    if (mx->parsed()) return cmd_maximal(o, out);
    if (res->parsed()) return cmd_restrict(o, out);
    if (ext->parsed()) return cmd_extensions(o, out);
    if (cen->parsed()) return cmd_census(o, out);
    if (comp->parsed()) return cmd_components(o, out);
  } catch (const StrataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (e.code() == Errc::ScaleExceeded) return kExitScale;
    if (e.code() == Errc::BadInput || e.code() == Errc::InvalidGraph) return kExitValidation;
    return 1;
  }
  return 1;
}
