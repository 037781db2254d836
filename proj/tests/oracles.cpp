#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "cyclic/error.hpp"

namespace oracle {

namespace {

using C = std::complex<double>;

C root(int m, long long e) {
  const double a = 2.0 * std::numbers::pi * static_cast<double>(((e % m) + m) % m) / m;
  return {std::cos(a), std::sin(a)};
}

bool close(C a, C b) { return std::abs(a - b) < 1e-9; }

// Rotation exponent r with gamma^g acting as exp(2 pi i r / m) at a type-i point.
int rotation(int d, int type) {
  const int g = std::gcd(type, d), m = d / g;
  for (int r = 0; r < m; ++r)
    if (((type / g) * r) % m == 1 % m) return r;
  throw cyclic::StrataError(cyclic::Errc::InconsistentStabilizer, "no rotation");
}

// gamma moves fiber point x to x + 1; the chart change is trivial except on the
// wrap-around step, where it carries the stabilizer rotation.
C step_derivative(int d, int type, int x) {
  if (type == 0) return 1.0;
  const int g = std::gcd(type, d), m = d / g;
  return x == g - 1 ? root(m, rotation(d, type)) : C(1.0);
}

}  // namespace

cyclic::BranchingSequence restrict_coset_model(const cyclic::BranchingSequence& k, int sub) {
  const int d = k.order();
  const int s = d / sub;
  std::vector<int> out(sub - 1, 0);
  for (int i = 1; i < d; ++i) {
    if (k.count(i) == 0) continue;
    const int fiber = std::gcd(i, d);
    std::vector<char> seen(fiber, 0);
    for (int x0 = 0; x0 < fiber; ++x0) {
      if (seen[x0]) continue;
      // Walk gamma^s from x0 until it returns, multiplying derivatives.
      int x = x0, t = 0;
      C der = 1.0;
      do {
        for (int j = 0; j < s; ++j) {
          der *= step_derivative(d, i, x);
          x = (x + 1) % fiber;
        }
        seen[x] = 1;
        ++t;
      } while (x != x0);
      // <gamma^s> has order sub; the stabilizer of x0 is generated by gamma^(s t).
      const int stab = sub / t;
      if (stab == 1) continue;
      // Type i' with (gamma^s)^(i') fixing x0 and rotating by exp(2 pi i / stab).
      int found = 0;
      for (int ip = 1; ip < sub && !found; ++ip) {
        if (ip % t != 0) continue;
        C p = 1.0;
        for (int j = 0; j < ip / t; ++j) p *= der;
        if (close(p, root(stab, 1))) found = ip;
      }
      if (!found) throw cyclic::StrataError(cyclic::Errc::InconsistentStabilizer, "coset model found no type");
      out[found - 1] += k.count(i);
    }
  }
  return {sub, out};
}

std::complex<double> derivative(const cyclic::MarkedGraph& g, cyclic::PointRef p, int power) {
  const cyclic::OrbitPartition op = cyclic::orbit_partition(g);
  C der = 1.0;
  for (int j = 0; j < power; ++j) {
    const cyclic::VertexData& v = g.vertices[p.vertex];
    const int next = g.gamma_vertex[p.vertex];
    if (op.orbits[op.orbit_of[next]].front() == next && v.h_order > 1) {
      const int fiber = p.slot.type == 0 ? v.h_order : std::gcd(p.slot.type, v.h_order);
      const int x = p.slot.fiber % fiber;
      der *= step_derivative(v.h_order, p.slot.type, x);
      p.slot.fiber = p.slot.fiber - x + (x + 1) % fiber;
    }
    p.vertex = next;
  }
  return der;
}

bool node_orbit_smoothable(const cyclic::MarkedGraph& g, int edge) {
  // Orbit of the node: P_0 = edge, P_j = gamma^j(P_0). Charts x_j = x_0 o gamma^-j make
  // gamma: P_j -> P_(j+1) the identity for j < r - 1; invariance then forces
  // t_0 = ... = t_(r-1) and t_0 = chi(gamma^r) t_(r-1).
  int r = 1;
  for (int e = g.gamma_edge[edge]; e != edge; e = g.gamma_edge[e]) ++r;
  const auto& ends = g.edges[edge].ends;
  const C a = derivative(g, {ends[0].vertex, ends[0].slot}, r);
  const C b = derivative(g, {ends[1].vertex, ends[1].slot}, r);
  // t = x y picks up the product of the two branch derivatives, swapped or not.
  const C chi = a * b;
  std::vector<C> t(r, 1.0);
  for (int j = 0; j + 1 < r; ++j) t[j + 1] = t[j];
  return close(t[0], chi * t[r - 1]);
}

}  // namespace oracle
