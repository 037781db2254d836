#include "cyclic/group_ext.hpp"

#include <array>
#include <string>
#include <utility>

#include "cyclic/arith.hpp"
#include "cyclic/error.hpp"

namespace cyclic {

bool satisfies_constraints(const ExtPresentation& p) {
  const int d = p.d;
  for (int l : {p.l1, p.l2}) {
    if (l < 0 || l >= d || gcd(l, d) != 1 || mod(std::int64_t{l} * l, d) != 1 % d) return false;
    if (mod(std::int64_t{l + 1} * p.e12, d) != 0) return false;
  }
  if (p.e12 < 0 || p.e12 >= d || p.f < 0 || p.f >= d) return false;
  const std::int64_t s = std::int64_t{p.l1} * p.l2 + 1;
  if (p.e12 % gcd(d, s) != 0) return false;
  return mod(s * p.f + p.e12, d) == 0;
}

std::vector<ExtPresentation> enumerate_presentations(int d) {
  if (d < 2) throw StrataError(Errc::BadInput, "extension presentations need d >= 2");
  std::vector<ExtPresentation> out;
  for (int l1 = 0; l1 < d; ++l1)
    for (int l2 = 0; l2 < d; ++l2)
      for (int e = 0; e < d; ++e)
        for (int f = 0; f < d; ++f) {
          ExtPresentation p{d, l1, l2, e, f};
          if (satisfies_constraints(p)) out.push_back(p);
        }
  return out;
}

namespace {

struct Letter {
  int gen;  // 0 alpha, 1 beta1, 2 beta2
  int exp;  // alpha exponent, 1 for betas
};

}  // namespace

int normal_form(const ExtPresentation& p, const std::vector<int>& word) {
  const int d = p.d;
  std::vector<Letter> w;
  for (int x : word) w.push_back({x, 1});
  const std::size_t bound = 64 + 64 * word.size() * word.size();
  for (std::size_t steps = 0;; ++steps) {
    if (steps > bound) throw StrataError(Errc::InconsistentPresentation, "rewriting does not terminate");
    bool changed = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].gen == 0 && mod(w[i].exp, d) == 0) {
        w.erase(w.begin() + i);
        changed = true;
        break;
      }
      if (i + 1 == w.size()) break;
      Letter& x = w[i];
      Letter& y = w[i + 1];
      if (x.gen == 0 && y.gen == 0) {
        x.exp = static_cast<int>(mod(x.exp + y.exp, d));
        w.erase(w.begin() + i + 1);
      } else if (x.gen != 0 && y.gen == 0) {
        const int l = x.gen == 1 ? p.l1 : p.l2;
        const Letter beta = x;
        x = {0, static_cast<int>(mod(std::int64_t{y.exp} * l, d))};
        y = beta;
      } else if (x.gen == y.gen) {
        w.erase(w.begin() + i, w.begin() + i + 2);
      } else if (x.gen == 2 && y.gen == 1) {
        x = {1, 1};
        y = {2, 1};
        w.insert(w.begin() + i + 2, Letter{0, static_cast<int>(mod(-p.e12, d))});
      } else {
        continue;
      }
      changed = true;
      break;
    }
    if (!changed) break;
  }
  int a = 0, e1 = 0, e2 = 0;
  std::size_t i = 0;
  if (i < w.size() && w[i].gen == 0) a = static_cast<int>(mod(w[i++].exp, d));
  if (i < w.size() && w[i].gen == 1) e1 = 1, ++i;
  if (i < w.size() && w[i].gen == 2) e2 = 1, ++i;
  if (i != w.size()) throw StrataError(Errc::InconsistentPresentation, "rewriting stopped outside normal form");
  return GroupTable::element(a, e1, e2);
}

int GroupTable::element_order(int x) const {
  int y = x, k = 1;
  while (y != 0) {
    y = (*this)(y, x);
    if (++k > order) return 0;
  }
  return k;
}

namespace {

std::vector<int> word_of(int x) {
  std::vector<int> w;
  const int a = x / 4;
  if (a) w.insert(w.end(), a, 0);
  if (x & 2) w.push_back(1);
  if (x & 1) w.push_back(2);
  return w;
}

[[noreturn]] void fail(const ExtPresentation& p, const std::string& what) {
  throw StrataError(Errc::InconsistentPresentation,
                    "(d=" + std::to_string(p.d) + ", l1=" + std::to_string(p.l1) + ", l2=" + std::to_string(p.l2) +
                        ", e12=" + std::to_string(p.e12) + ", f=" + std::to_string(p.f) + "): " + what);
}

}  // namespace

GroupTable build_group(const ExtPresentation& p) {
  if (p.d < 1) throw StrataError(Errc::BadInput, "d must be positive");
  const int d = p.d;
  const int n = 4 * d;
  GroupTable t;
  t.d = d;
  t.order = n;
  // Cheap consistency probes before the exhaustive checks.
  const int alpha = GroupTable::element(1 % d, 0, 0), b1 = GroupTable::element(0, 1, 0), b2 = GroupTable::element(0, 0, 1);
  // Probes against alpha first: they catch l_i^2 != 1 and bad e12 soonest.
  std::vector<std::array<int, 3>> probes;
  for (int u : {0, 1, 2})
    for (int x : {b1, b2, b1 | b2, alpha})
      for (int s = 0; s < 3; ++s) probes.push_back({x, s, u});
  for (const auto& [x, s, u] : probes) {
    auto w = word_of(x);
    w.push_back(s);
    auto w2 = word_of(normal_form(p, w));
    w2.push_back(u);
    const int left = normal_form(p, w2);
    auto w3 = word_of(x);
    w3.push_back(s);
    w3.push_back(u);
    // x (s u) with s u reduced first
    auto w4 = word_of(x);
    for (int c : word_of(normal_form(p, {s, u}))) w4.push_back(c);
    if (left != normal_form(p, w4) || left != normal_form(p, w3)) fail(p, "relations are not consistent");
  }
  // b3^2 by rewriting alone.
  {
    std::vector<int> w;
    for (int rep = 0; rep < 2; ++rep) {
      w.push_back(1);
      w.push_back(2);
      w.insert(w.end(), p.f % d, 0);
    }
    if (normal_form(p, w) != 0) fail(p, "b3 is not an involution");
  }
  // Right multiplication by the generators, then every product by walking y's word.
  std::vector<std::array<int, 3>> right(n);
  for (int x = 0; x < n; ++x)
    for (int s = 0; s < 3; ++s) {
      auto w = word_of(x);
      w.push_back(s);
      right[x][s] = normal_form(p, w);
    }
  t.mul.assign(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int z = x;
      for (int c : word_of(y)) z = right[z][c];
      t.mul[static_cast<std::size_t>(x) * n + y] = z;
    }
  // Orders of the generators and of b3 in the table.
  const int b3 = t(t(b1, b2), GroupTable::element(p.f % d, 0, 0));
  if (t.element_order(b1) != 2 || t.element_order(b2) != 2 || t.element_order(b3) != 2)
    fail(p, "b1, b2, b3 are not all involutions");
  if ((t(t(b1, b2), b3) & 3) != 0) fail(p, "b1 b2 b3 lies outside <alpha>");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xy = t(x, y);
      for (int z = 0; z < n; ++z)
        if (t(xy, z) != t(x, t(y, z))) fail(p, "multiplication is not associative");
    }
  for (int x = 0; x < n; ++x) {
    if (t(0, x) != x || t(x, 0) != x) fail(p, "normal form 1 is not an identity");
    bool has_inverse = false;
    for (int y = 0; y < n && !has_inverse; ++y) has_inverse = t(x, y) == 0;
    if (!has_inverse) fail(p, "element without inverse");
  }
  if (t.element_order(alpha) != d) fail(p, "alpha does not have order d");
  for (int x = 0; x < n; ++x) {
    int xinv = 0;
    while (t(x, xinv) != 0) ++xinv;
    if ((t(t(x, alpha), xinv) & 3) != 0) fail(p, "<alpha> is not normal");
    if ((t(x, x) & 3) != 0) fail(p, "quotient by <alpha> is not (Z/2)^2");
  }
  return t;
}

}  // namespace cyclic
