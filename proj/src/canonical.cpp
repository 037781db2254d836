#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>

#include "cyclic/arith.hpp"
#include "cyclic/error.hpp"
#include "cyclic/marked_graph.hpp"

namespace cyclic {

namespace {

constexpr int kEncodingVersion = 1;

// A G-orbit of node points: an H_i-orbit of slots on one vertex orbit. Its
// points are numbered x = copy + n * f, so gamma acts by x -> x + 1.
struct Torsor {
  int orbit = 0;
  int type = 0;
  int index = 0;
  friend auto operator<=>(const Torsor&, const Torsor&) = default;
};

struct TorsorPair {
  Torsor a, b;
  bool swap = false;
  int size = 0;   // points in each torsor
  int delta = 0;  // x in a is glued to x + delta in b
};

struct OrbitData {
  std::vector<int> label;  // n, |G''|, d_i, g, h, k...
  int n = 1;
  int h_order = 1;
};

struct Skeleton {
  int d = 1;
  std::vector<OrbitData> orbits;
  std::vector<TorsorPair> pairs;
};

std::vector<int> orbit_label(const VertexData& v) {
  std::vector<int> out{v.orbit_len, v.ord_trivial, v.h_order, v.genus, v.quotient_genus};
  out.insert(out.end(), v.k.begin(), v.k.end());
  return out;
}

Skeleton skeleton(const MarkedGraph& g) {
  const OrbitPartition op = orbit_partition(g);
  std::vector<int> copy(g.vertices.size());
  for (const auto& o : op.orbits)
    for (std::size_t j = 0; j < o.size(); ++j) copy[o[j]] = static_cast<int>(j);
  Skeleton sk;
  sk.d = g.d;
  for (const auto& o : op.orbits) {
    const VertexData& v = g.vertices[o.front()];
    sk.orbits.push_back({orbit_label(v), static_cast<int>(o.size()), v.h_order});
  }
  auto locate = [&](const HalfEdge& h, Torsor& t, int& x, int& size) {
    const VertexData& v = g.vertices[h.vertex];
    const int f = slot_fiber_size(v, h.slot.type);
    const int n = static_cast<int>(op.orbits[op.orbit_of[h.vertex]].size());
    t = {op.orbit_of[h.vertex], h.slot.type, h.slot.fiber / f};
    x = copy[h.vertex] + n * (h.slot.fiber % f);
    size = n * f;
  };
  std::map<std::pair<Torsor, Torsor>, bool> seen;
  for (const auto& e : g.edges) {
    Torsor a, b;
    int xa, xb, na, nb;
    locate(e.ends[0], a, xa, na);
    locate(e.ends[1], b, xb, nb);
    if (b < a) {
      std::swap(a, b);
      std::swap(xa, xb);
    }
    if (seen.count({a, b})) continue;
    seen[{a, b}] = true;
    if (na != nb) throw StrataError(Errc::InvalidGraph, "paired node orbits of different sizes");
    TorsorPair p{a, b, a == b, na, static_cast<int>(mod(xb - xa, na))};
    if (p.swap) p.delta = na / 2;
    sk.pairs.push_back(p);
  }
  return sk;
}

using Desc = std::array<int, 6>;  // o1, l1, o2, l2, swap, delta

Encoding serialize(int d, const std::vector<std::vector<int>>& labels, std::vector<Desc> descs) {
  std::sort(descs.begin(), descs.end());
  std::vector<int> words{kEncodingVersion, d, static_cast<int>(labels.size())};
  for (const auto& l : labels) words.insert(words.end(), l.begin(), l.end());
  words.push_back(static_cast<int>(descs.size()));
  for (const auto& x : descs) words.insert(words.end(), x.begin(), x.end());
  Encoding out;
  out.reserve(words.size() * 2);
  for (int w : words) {
    if (w < 0 || w > 0xffff) throw StrataError(Errc::ScaleExceeded, "value does not fit the encoding");
    out.push_back(static_cast<std::uint8_t>(w >> 8));
    out.push_back(static_cast<std::uint8_t>(w & 0xff));
  }
  return out;
}

// The skeleton after replacing gamma by the generator matching unit u.
Skeleton apply_unit(const Skeleton& sk, int u) {
  Skeleton out = sk;
  for (auto& o : out.orbits) {
    if (o.h_order < 2) continue;
    const BranchingSequence k(o.h_order, std::vector<int>(o.label.begin() + 5, o.label.end()));
    const auto moved = unit_act(static_cast<int>(mod(u, o.h_order)), k).counts();
    std::copy(moved.begin(), moved.end(), o.label.begin() + 5);
  }
  for (auto& p : out.pairs) {
    p.a.type = static_cast<int>(mod(std::int64_t{p.a.type} * u, sk.orbits[p.a.orbit].h_order));
    p.b.type = static_cast<int>(mod(std::int64_t{p.b.type} * u, sk.orbits[p.b.orbit].h_order));
    p.delta = static_cast<int>(mod(std::int64_t{p.delta} * u, p.size));
  }
  return out;
}

Desc describe(const Skeleton& sk, const TorsorPair& p, const std::vector<int>& pos, const std::vector<int>& shift) {
  int o1 = pos[p.a.orbit], l1 = p.a.type, o2 = pos[p.b.orbit], l2 = p.b.type;
  if (p.swap) return {o1, l1, o2, l2, 1, 0};
  const int m = static_cast<int>(gcd(sk.orbits[p.a.orbit].n, sk.orbits[p.b.orbit].n));
  int delta = static_cast<int>(mod(p.delta + shift[p.b.orbit] - shift[p.a.orbit], m));
  if (std::tie(o2, l2) < std::tie(o1, l1)) {
    std::swap(o1, o2);
    std::swap(l1, l2);
    delta = static_cast<int>(mod(-delta, m));
  } else if (o1 == o2 && l1 == l2) {
    delta = std::min(delta, static_cast<int>(mod(-delta, m)));
  }
  return {o1, l1, o2, l2, 0, delta};
}

struct Refined {
  std::vector<int> label;
  std::vector<std::array<int, 3>> attach;  // own type, partner key, partner type + swap
  friend auto operator<=>(const Refined&, const Refined&) = default;
};

// Minimum encoding for one unit.
Encoding best_for(const Skeleton& sk) {
  const int no = static_cast<int>(sk.orbits.size());
  // Orbit invariant: label, then the multiset of attachments to partner labels.
  std::vector<std::vector<int>> labels(no);
  for (int o = 0; o < no; ++o) labels[o] = sk.orbits[o].label;
  std::vector<int> label_rank(no);
  {
    std::vector<std::vector<int>> uniq = labels;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (int o = 0; o < no; ++o)
      label_rank[o] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), labels[o]) - uniq.begin());
  }
  std::vector<Refined> inv(no);
  for (int o = 0; o < no; ++o) inv[o].label = labels[o];
  for (const auto& p : sk.pairs) {
    inv[p.a.orbit].attach.push_back({p.a.type, label_rank[p.b.orbit], p.b.type * 2 + p.swap});
    if (!p.swap) inv[p.b.orbit].attach.push_back({p.b.type, label_rank[p.a.orbit], p.a.type * 2});
  }
  for (auto& r : inv) std::sort(r.attach.begin(), r.attach.end());
  std::vector<int> order(no);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return inv[a] < inv[b]; });
  std::vector<std::pair<int, int>> groups;  // [begin, end) in order
  for (int i = 0; i < no;) {
    int j = i;
    while (j < no && inv[order[j]] == inv[order[i]]) ++j;
    groups.push_back({i, j});
    i = j;
  }
  std::vector<std::vector<int>> sorted_labels(no);
  for (int i = 0; i < no; ++i) sorted_labels[i] = labels[order[i]];

  Encoding best;
  std::vector<int> pos(no), shift(no, 0);
  auto try_ordering = [&]() {
    for (int i = 0; i < no; ++i) pos[order[i]] = i;
    const int first = order.empty() ? 0 : order[0];
    std::fill(shift.begin(), shift.end(), 0);
    while (true) {
      std::vector<Desc> descs;
      descs.reserve(sk.pairs.size());
      for (const auto& p : sk.pairs) descs.push_back(describe(sk, p, pos, shift));
      Encoding e = serialize(sk.d, sorted_labels, std::move(descs));
      if (best.empty() || e < best) best = std::move(e);
      int o = 0;
      for (; o < no; ++o) {
        if (o == first) continue;
        if (++shift[o] < sk.orbits[o].n) break;
        shift[o] = 0;
      }
      if (o == no) break;
    }
  };
  // Odometer over the permutations of every group.
  std::function<void(std::size_t)> rec = [&](std::size_t gi) {
    if (gi == groups.size()) {
      try_ordering();
      return;
    }
    auto [b, e] = groups[gi];
    std::sort(order.begin() + b, order.begin() + e);
    do {
      rec(gi + 1);
    } while (std::next_permutation(order.begin() + b, order.begin() + e));
  };
  rec(0);
  return best;
}

}  // namespace

Encoding canonical_numerical_type(const MarkedGraph& g) {
  const Skeleton sk = skeleton(g);
  Encoding best;
  const std::vector<int> us = g.d == 1 ? std::vector<int>{1} : units(g.d);
  for (int u : us) {
    Encoding e = best_for(apply_unit(sk, u));
    if (best.empty() || e < best) best = std::move(e);
  }
  return best;
}

CanonicalOrbitForm canonical_orbit_form(const MarkedGraph& g, int vertex) {
  const Skeleton sk = skeleton(g);
  const OrbitPartition op = orbit_partition(g);
  const int o = op.orbit_of.at(vertex);
  CanonicalOrbitForm out;
  out.copies = sk.orbits[o].n;
  out.shape = sk.orbits[o].label;
  for (const auto& p : sk.pairs) {
    if (p.a.orbit == o)
      out.attachments.push_back({p.a.type, p.size, p.b.type, p.swap, sk.orbits[p.b.orbit].label});
    if (p.b.orbit == o && !p.swap)
      out.attachments.push_back({p.b.type, p.size, p.a.type, false, sk.orbits[p.a.orbit].label});
  }
  std::sort(out.attachments.begin(), out.attachments.end());
  return out;
}

MarkedGraph decode_numerical_type(const Encoding& e) {
  if (e.size() % 2 != 0) throw StrataError(Errc::BadInput, "encoding has odd length");
  std::vector<int> w;
  for (std::size_t i = 0; i < e.size(); i += 2) w.push_back(e[i] << 8 | e[i + 1]);
  std::size_t at = 0;
  auto next = [&]() {
    if (at >= w.size()) throw StrataError(Errc::BadInput, "truncated encoding");
    return w[at++];
  };
  if (next() != kEncodingVersion) throw StrataError(Errc::BadInput, "unknown encoding version");
  MarkedGraph g;
  g.d = next();
  const int no = next();
  std::vector<int> first(no), len(no);
  for (int o = 0; o < no; ++o) {
    VertexData v;
    v.orbit_len = next();
    v.ord_trivial = next();
    v.h_order = next();
    v.genus = next();
    v.quotient_genus = next();
    if (v.h_order < 1 || v.orbit_len < 1) throw StrataError(Errc::BadInput, "bad orbit label");
    for (int i = 1; i < v.h_order; ++i) v.k.push_back(next());
    first[o] = static_cast<int>(g.vertices.size());
    len[o] = v.orbit_len;
    for (int j = 0; j < v.orbit_len; ++j) {
      v.id = static_cast<int>(g.vertices.size());
      g.vertices.push_back(v);
      g.gamma_vertex.push_back(first[o] + (j + 1) % v.orbit_len);
    }
  }
  std::map<std::pair<int, int>, int> allocated;
  auto torsor = [&](int o, int type) {
    if (o < 0 || o >= no) throw StrataError(Errc::BadInput, "orbit index out of range");
    const VertexData& v = g.vertices[first[o]];
    if (type < 0 || type >= std::max(v.h_order, 1)) throw StrataError(Errc::BadInput, "type out of range");
    const int t = allocated[{o, type}]++;
    if (type > 0 && t >= v.k[type - 1]) throw StrataError(Errc::BadInput, "more node orbits than branch points");
    return t;
  };
  auto point = [&](int o, int type, int t, int x) {
    const VertexData& v = g.vertices[first[o]];
    const int f = slot_fiber_size(v, type);
    const int n = len[o];
    x = static_cast<int>(mod(x, n * f));
    return HalfEdge{first[o] + x % n, Slot{type, t * f + x / n}, 0, 1};
  };
  const int np = next();
  for (int i = 0; i < np; ++i) {
    const int o1 = next(), l1 = next(), o2 = next(), l2 = next(), sw = next(), delta = next();
    const int ta = torsor(o1, l1);
    const int n1 = len[o1] * slot_fiber_size(g.vertices[first[o1]], l1);
    if (sw) {
      if (o1 != o2 || l1 != l2 || n1 % 2 != 0) throw StrataError(Errc::BadInput, "bad swap pair");
      for (int x = 0; x < n1 / 2; ++x)
        g.edges.push_back({static_cast<int>(g.edges.size()), {point(o1, l1, ta, x), point(o1, l1, ta, x + n1 / 2)}});
      continue;
    }
    const int tb = torsor(o2, l2);
    const int n2 = len[o2] * slot_fiber_size(g.vertices[first[o2]], l2);
    if (n1 != n2) throw StrataError(Errc::BadInput, "paired node orbits of different sizes");
    for (int x = 0; x < n1; ++x)
      g.edges.push_back({static_cast<int>(g.edges.size()), {point(o1, l1, ta, x), point(o2, l2, tb, x + delta)}});
  }
  if (at != w.size()) throw StrataError(Errc::BadInput, "trailing data in encoding");
  for (int o = 0; o < no; ++o) {
    std::vector<int> free;
    const VertexData& v = g.vertices[first[o]];
    for (int l = 1; l < v.h_order; ++l)
      for (int b = allocated[{o, l}]; b < v.k[l - 1]; ++b) free.push_back(l);
    for (int j = 0; j < len[o]; ++j) g.vertices[first[o] + j].free_slots = free;
  }
  finalize_graph(g);
  return g;
}

std::string to_hex(const Encoding& e) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(e.size() * 2);
  for (auto b : e) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 15]);
  }
  return s;
}

Encoding from_hex(const std::string& s) {
  if (s.size() % 2 != 0) throw StrataError(Errc::BadInput, "hex string has odd length");
  auto val = [](char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw StrataError(Errc::BadInput, "invalid hex digit");
  };
  Encoding e;
  for (std::size_t i = 0; i < s.size(); i += 2) e.push_back(static_cast<std::uint8_t>(val(s[i]) << 4 | val(s[i + 1])));
  return e;
}

}  // namespace cyclic
