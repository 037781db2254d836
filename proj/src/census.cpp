#include "cyclic/census.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "cyclic/arith.hpp"
#include "cyclic/deformation.hpp"
#include "cyclic/error.hpp"

namespace cyclic {

namespace {

struct TorsorOption {
  int type = 0;
  int per_copy = 1;  // node points on each copy
  int size = 1;      // points in the G-orbit
  int available = 0; // branch points of this type; -1 for unramified orbits
  int rot = 0;
  int stab = 1;
};

struct Template {
  int n = 1, ord2 = 1, h_order = 1, genus = 0, h = 0;
  std::vector<int> k;
  std::vector<TorsorOption> options;
  int min_valence = 1;
};

std::vector<Template> orbit_templates(int g, int d) {
  std::vector<Template> out;
  for (int n : divisors(d))
    for (int ord2 : divisors(d / n)) {
      const int hd = d / (n * ord2);
      for (int gi = 0; gi * n <= g; ++gi) {
        std::vector<std::vector<int>> seqs;
        if (hd == 1)
          seqs.push_back({});
        else
          for (const auto& s : admissible_sequences(gi, hd)) seqs.push_back(s.counts());
        for (auto& k : seqs) {
          Template t;
          t.n = n;
          t.ord2 = ord2;
          t.h_order = hd;
          t.genus = gi;
          t.k = k;
          t.h = hd == 1 ? gi : static_cast<int>(boost::rational_cast<std::int64_t>(quotient_genus(gi, {hd, k})));
          VertexData v;
          v.h_order = hd;
          v.ord_trivial = ord2;
          for (int l = 0; l < hd; ++l) {
            if (l > 0 && k[l - 1] == 0) continue;
            TorsorOption o;
            o.type = l;
            o.per_copy = slot_fiber_size(v, l);
            o.size = n * o.per_copy;
            o.available = l == 0 ? -1 : k[l - 1];
            o.rot = full_rotation(v, l);
            o.stab = full_stabilizer(v, l);
            t.options.push_back(o);
          }
          t.min_valence = std::max(1, 3 - 2 * gi);
          out.push_back(std::move(t));
        }
      }
    }
  return out;
}

struct Kind {
  int o1, i1, o2, i2;  // orbit and option indices
  bool swap;
  int delta;
  int cost;
};

void put(Encoding& e, int w) {
  e.push_back(static_cast<std::uint8_t>(w >> 8));
  e.push_back(static_cast<std::uint8_t>(w & 0xff));
}

struct Generator {
  int g, d;
  bool nonsmoothable_only;
  const std::vector<Template>& templates;
  std::set<Encoding> found;

  bool character_ok(const TorsorOption& a, const TorsorOption& b, bool swap) const {
    if (!nonsmoothable_only) return true;
    if (swap) return !local_node_character(2 * a.stab, a.rot, a.rot, true).trivial();
    return !local_node_character(a.stab, a.rot, b.rot, false).trivial();
  }

  void run(const std::vector<int>& multiset) {
    const int no = static_cast<int>(multiset.size());
    int verts = 0, genus_sum = 0;
    for (int t : multiset) {
      verts += templates[t].n;
      genus_sum += templates[t].n * templates[t].genus;
    }
    const int edges = g - 1 + verts - genus_sum;
    if (edges < std::max(1, verts - 1)) return;

    std::vector<Kind> kinds;
    for (int o1 = 0; o1 < no; ++o1)
      for (int o2 = o1; o2 < no; ++o2) {
        const Template& t1 = templates[multiset[o1]];
        const Template& t2 = templates[multiset[o2]];
        for (std::size_t i1 = 0; i1 < t1.options.size(); ++i1)
          for (std::size_t i2 = (o1 == o2 ? i1 : 0); i2 < t2.options.size(); ++i2) {
            const TorsorOption& a = t1.options[i1];
            const TorsorOption& b = t2.options[i2];
            if (a.size != b.size) continue;
            if (character_ok(a, b, false)) {
              const int m = static_cast<int>(gcd(t1.n, t2.n));
              for (int delta = 0; delta < m; ++delta) {
                if (o1 == o2 && i1 == i2 && static_cast<int>(mod(-delta, m)) < delta) continue;
                kinds.push_back({o1, static_cast<int>(i1), o2, static_cast<int>(i2), false, delta, a.size});
              }
            }
            if (o1 == o2 && i1 == i2 && a.size % 2 == 0 && character_ok(a, a, true))
              kinds.push_back({o1, static_cast<int>(i1), o2, static_cast<int>(i2), true, 0, a.size / 2});
          }
      }

    std::vector<std::vector<int>> used(no);
    std::vector<int> valence(no, 0);
    for (int o = 0; o < no; ++o) used[o].assign(templates[multiset[o]].options.size(), 0);
    std::vector<int> chosen;

    auto can_use = [&](int o, int i, int times) {
      const TorsorOption& op = templates[multiset[o]].options[i];
      return op.available < 0 || used[o][i] + times <= op.available;
    };

    // Half-edges still needed for stability; every edge supplies two.
    auto deficit = [&] {
      int need = 0;
      for (int o = 0; o < no; ++o) {
        const Template& t = templates[multiset[o]];
        need += t.n * std::max(0, t.min_valence - valence[o]);
      }
      return need;
    };

    // reachable[ki][c]: some multiset of kinds ki.. has total cost c.
    std::vector<std::vector<char>> reachable(kinds.size() + 1, std::vector<char>(edges + 1, 0));
    reachable[kinds.size()][0] = 1;
    for (std::size_t ki = kinds.size(); ki-- > 0;)
      for (int c = 0; c <= edges; ++c)
        reachable[ki][c] = reachable[ki + 1][c] || (c >= kinds[ki].cost && reachable[ki][c - kinds[ki].cost]);

    // Kinds are grouped by their first orbit, so an orbit below kinds[ki].o1
    // gets no further half-edges.
    auto first_deficient = [&] {
      for (int o = 0; o < no; ++o)
        if (valence[o] < templates[multiset[o]].min_valence) return o;
      return no;
    };

    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
      if (!reachable[from][left] || deficit() > 2 * left) return;
      if (left == 0) {
        leaf(multiset, kinds, chosen, valence);
        return;
      }
      const int stuck = first_deficient();
      for (std::size_t ki = from; ki < kinds.size(); ++ki) {
        const Kind& k = kinds[ki];
        if (k.o1 > stuck) break;
        if (k.cost > left || !reachable[ki][left - k.cost]) continue;
        const bool same = !k.swap && k.o1 == k.o2 && k.i1 == k.i2;
        if (k.swap || same ? !can_use(k.o1, k.i1, k.swap ? 1 : 2)
                           : !(can_use(k.o1, k.i1, 1) && can_use(k.o2, k.i2, 1)))
          continue;
        const int pc1 = templates[multiset[k.o1]].options[k.i1].per_copy;
        const int pc2 = templates[multiset[k.o2]].options[k.i2].per_copy;
        if (k.swap) {
          ++used[k.o1][k.i1];
          valence[k.o1] += pc1;
        } else {
          ++used[k.o1][k.i1];
          ++used[k.o2][k.i2];
          valence[k.o1] += pc1;
          valence[k.o2] += pc2;
        }
        chosen.push_back(static_cast<int>(ki));
        rec(ki, left - k.cost);
        chosen.pop_back();
        if (k.swap) {
          --used[k.o1][k.i1];
          valence[k.o1] -= pc1;
        } else {
          --used[k.o1][k.i1];
          --used[k.o2][k.i2];
          valence[k.o1] -= pc1;
          valence[k.o2] -= pc2;
        }
      }
    };
    rec(0, edges);
  }

  void leaf(const std::vector<int>& multiset, const std::vector<Kind>& kinds, const std::vector<int>& chosen,
            const std::vector<int>& valence) {
    const int no = static_cast<int>(multiset.size());
    for (int o = 0; o < no; ++o) {
      const Template& t = templates[multiset[o]];
      if (2 * t.genus - 2 + valence[o] <= 0) return;
    }
    // Orbit-level connectivity.
    std::vector<int> parent(no);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    int comps = no;
    for (int ki : chosen) {
      const int a = find(kinds[ki].o1), b = find(kinds[ki].o2);
      if (a != b) parent[a] = b, --comps;
    }
    if (comps != 1) return;

    Encoding e;
    put(e, 1);
    put(e, d);
    put(e, no);
    for (int t : multiset) {
      const Template& tp = templates[t];
      for (int w : {tp.n, tp.ord2, tp.h_order, tp.genus, tp.h}) put(e, w);
      for (int x : tp.k) put(e, x);
    }
    put(e, static_cast<int>(chosen.size()));
    for (int ki : chosen) {
      const Kind& k = kinds[ki];
      const Template& t1 = templates[multiset[k.o1]];
      const Template& t2 = templates[multiset[k.o2]];
      for (int w : {k.o1, t1.options[k.i1].type, k.o2, t2.options[k.i2].type, k.swap ? 1 : 0, k.delta}) put(e, w);
    }
    const MarkedGraph graph = decode_numerical_type(e);
    if (!is_connected(graph)) return;
    found.insert(canonical_numerical_type(graph));
  }
};

std::vector<std::vector<int>> template_multisets(int g, const std::vector<Template>& templates, int max_vertices,
                                                 int natural_vertices, bool& truncated) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  const int budget = 2 * g - 2;
  std::function<void(std::size_t, int, int, int)> rec = [&](std::size_t from, int weight, int genus, int verts) {
    if (!cur.empty()) out.push_back(cur);
    for (std::size_t t = from; t < templates.size(); ++t) {
      const Template& tp = templates[t];
      const int w = tp.n * (2 * tp.genus - 2 + tp.min_valence);
      if (weight + w > budget || genus + tp.n * tp.genus > g) continue;
      if (verts + tp.n > natural_vertices) continue;
      if (verts + tp.n > max_vertices) {
        truncated = true;
        continue;
      }
      cur.push_back(static_cast<int>(t));
      rec(t, weight + w, genus + tp.n * tp.genus, verts + tp.n);
      cur.pop_back();
    }
  };
  rec(0, 0, 0, 0);
  return out;
}

CensusLimits effective(int g, CensusLimits limits) {
  const int nv = std::max(1, 2 * g - 2), ne = std::max(1, 3 * g - 3);
  CensusLimits out;
  out.max_vertices = limits.max_vertices > 0 ? std::min(limits.max_vertices, nv) : nv;
  out.max_edges = limits.max_edges > 0 ? std::min(limits.max_edges, ne) : ne;
  return out;
}

std::vector<Encoding> run_generation(int g, int d, CensusLimits limits, bool nonsmoothable_only, int threads,
                                     bool& complete) {
  if (g < 2) throw StrataError(Errc::BadInput, "census needs g >= 2");
  if (d < 2) throw StrataError(Errc::BadInput, "census needs d >= 2");
  const CensusLimits eff = effective(g, limits);
  const auto templates = orbit_templates(g, d);
  bool truncated = false;
  auto multisets = template_multisets(g, templates, eff.max_vertices, std::max(1, 2 * g - 2), truncated);
  // Edge limit: multisets whose edge count exceeds it are skipped and flagged.
  std::vector<std::vector<int>> work;
  for (auto& m : multisets) {
    int verts = 0, gs = 0;
    for (int t : m) verts += templates[t].n, gs += templates[t].n * templates[t].genus;
    const int edges = g - 1 + verts - gs;
    if (edges > eff.max_edges) {
      if (edges <= 3 * g - 3) truncated = true;
      continue;
    }
    work.push_back(std::move(m));
  }
  threads = std::max(1, threads);
  std::atomic<std::size_t> next{0};
  std::vector<std::set<Encoding>> partial(threads);
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&](int id) {
    try {
      Generator gen{g, d, nonsmoothable_only, templates, {}};
      for (std::size_t i = next++; i < work.size(); i = next++) gen.run(work[i]);
      partial[id] = std::move(gen.found);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker, i);
  worker(0);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  std::set<Encoding> all;
  for (auto& p : partial) all.insert(p.begin(), p.end());
  complete = !truncated;
  return {all.begin(), all.end()};
}

}  // namespace

std::vector<Encoding> enumerate_types(int g, int d, CensusLimits limits, bool nonsmoothable_only, bool* complete) {
  bool c = true;
  auto out = run_generation(g, d, limits, nonsmoothable_only, 1, c);
  if (complete) *complete = c;
  return out;
}

CensusEntry make_entry(const MarkedGraph& g) {
  CensusEntry e;
  e.encoding = canonical_numerical_type(g);
  e.genus = total_genus(g);
  e.dimension = stratum_dimension(g).total;
  e.nonsmoothable = is_equivariantly_nonsmoothable(g);
  const MaximalityVerdict v = is_maximal(g);
  e.verdict = v.status;
  e.reason = v.reason;
  if (v.witness) {
    e.witness_summary = std::string(to_string(*v.reason));
    for (const auto& line : v.detail) e.witness_summary += "; " + line;
  } else if (!v.detail.empty()) {
    for (std::size_t i = 0; i < v.detail.size(); ++i) e.witness_summary += (i ? "; " : "") + v.detail[i];
  }
  return e;
}

CensusResult enumerate_strata(int g, int d, CensusLimits limits, int threads) {
  CensusResult r;
  r.g = g;
  r.d = d;
  r.limits = effective(g, limits);
  bool complete = true;
  const auto encodings = run_generation(g, d, limits, true, threads, complete);
  r.complete = complete;
  r.entries.resize(encodings.size());
  threads = std::max(1, threads);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&]() {
    try {
      for (std::size_t i = next++; i < encodings.size(); i = next++) {
        r.entries[i] = make_entry(decode_numerical_type(encodings[i]));
        r.entries[i].encoding = encodings[i];
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return r;
}

void require_complete(const CensusResult& r) {
  if (!r.complete)
    throw StrataError(Errc::ScaleExceeded, "census for g=" + std::to_string(r.g) + ", d=" + std::to_string(r.d) +
                                               " truncated by the vertex/edge limits");
}

ComponentList components(const CensusResult& census) {
  ComponentList out;
  for (const auto& e : census.entries) {
    if (e.verdict == MaximalityStatus::Maximal) out.maximal.push_back(e);
    if (e.verdict == MaximalityStatus::AssumptionsUnverifiable) out.unverifiable.push_back(e);
  }
  return out;
}

}  // namespace cyclic
