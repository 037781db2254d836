#include "cyclic/branching.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "cyclic/arith.hpp"
#include "cyclic/error.hpp"

namespace cyclic {

BranchingSequence::BranchingSequence(int d, std::vector<int> counts) : d_(d), k_(std::move(counts)) {
  if (d < 2) throw StrataError(Errc::BadInput, "branching sequence needs d >= 2, got " + std::to_string(d));
  if (static_cast<int>(k_.size()) != d - 1)
    throw StrataError(Errc::BadInput, "branching sequence for d=" + std::to_string(d) + " needs " +
                                          std::to_string(d - 1) + " entries, got " + std::to_string(k_.size()));
  for (int c : k_)
    if (c < 0) throw StrataError(Errc::BadInput, "negative branch-point count");
}

int BranchingSequence::total() const { return std::accumulate(k_.begin(), k_.end(), 0); }

std::int64_t BranchingSequence::weighted_sum() const {
  std::int64_t s = 0;
  for (int i = 1; i < d_; ++i) s += std::int64_t{i} * k_[i - 1];
  return s;
}

std::int64_t BranchingSequence::ramification_degree() const {
  std::int64_t s = 0;
  for (int i = 1; i < d_; ++i) s += std::int64_t{k_[i - 1]} * (d_ - std::gcd(i, d_));
  return s;
}

std::string BranchingSequence::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < k_.size(); ++i) os << (i ? "," : "") << k_[i];
  os << ')';
  return os.str();
}

Rational quotient_genus(int g, const BranchingSequence& k) {
  const std::int64_t d = k.order();
  // h = 1 + (g-1)/d - (1/2) sum k_i (1 - gcd(i,d)/d) = 1 + (2(g-1) - ram)/(2d)
  return Rational(1) + Rational(2 * (std::int64_t{g} - 1) - k.ramification_degree(), 2 * d);
}

int genus_from_quotient(int h, const BranchingSequence& k) {
  const std::int64_t d = k.order();
  std::int64_t twice = 2 + 2 * d * (h - 1) + k.ramification_degree();
  if (twice % 2 != 0)
    throw StrataError(Errc::NonIntegralGenus, "h=" + std::to_string(h) + ", k=" + k.to_string());
  return static_cast<int>(twice / 2);
}

bool is_admissible(int g, const BranchingSequence& k) {
  const int d = k.order();
  if (mod(k.weighted_sum(), d) != 0) return false;
  Rational h = quotient_genus(g, k);
  if (h.denominator() != 1 || h.numerator() < 0) return false;
  if (h.numerator() > 0) return true;
  int common = 0;
  for (int i = 1; i < d; ++i)
    if (k.count(i) != 0) common = std::gcd(common, i);
  return std::gcd(common, d) == 1;
}

BranchingSequence unit_act(int u, const BranchingSequence& k) {
  const int d = k.order();
  const int ur = static_cast<int>(mod(u, d));
  if (std::gcd(ur, d) != 1)
    throw StrataError(Errc::NotAUnit, std::to_string(u) + " is not a unit mod " + std::to_string(d));
  std::vector<int> out(d - 1, 0);
  for (int i = 1; i < d; ++i) out[mod(std::int64_t{ur} * i, d) - 1] = k.count(i);
  return {d, std::move(out)};
}

NumericalTypeClass canonicalize(const BranchingSequence& k) {
  std::set<BranchingSequence> images;
  for (int u : units(k.order())) images.insert(unit_act(u, k));
  return {*images.begin(), static_cast<int>(images.size())};
}

std::vector<BranchingSequence> admissible_sequences(int g, int d) {
  if (d < 2) throw StrataError(Errc::BadInput, "d must be >= 2");
  if (g < 0) return {};
  // h >= 0 bounds the ramification degree by 2g - 2 + 2d.
  const std::int64_t budget = 2 * std::int64_t{g} - 2 + 2 * std::int64_t{d};
  std::vector<BranchingSequence> out;
  std::vector<int> counts(d - 1, 0);
  std::function<void(int, std::int64_t)> rec = [&](int type, std::int64_t left) {
    if (type == d) {
      BranchingSequence k(d, counts);
      if (is_admissible(g, k)) out.push_back(std::move(k));
      return;
    }
    const int w = d - std::gcd(type, d);
    for (int c = 0; std::int64_t{c} * w <= left; ++c) {
      counts[type - 1] = c;
      rec(type + 1, left - std::int64_t{c} * w);
    }
    counts[type - 1] = 0;
  };
  if (budget >= 0) rec(1, budget);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NumericalTypeClass> enumerate_admissible(int g, int d) {
  std::vector<NumericalTypeClass> out;
  std::set<BranchingSequence> seen;
  for (const auto& k : admissible_sequences(g, d)) {
    auto cls = canonicalize(k);
    if (seen.insert(cls.representative).second) out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.representative < b.representative; });
  return out;
}

int teich_dimension(int h, int k_sum) {
  if (2 * h - 2 + k_sum < 0)
    throw StrataError(Errc::UnstableQuotient,
                      "h=" + std::to_string(h) + ", k=" + std::to_string(k_sum) + " has negative Euler characteristic");
  return std::max(0, 3 * (h - 1) + k_sum);
}

CoverShape cover_shape(int g, const BranchingSequence& k) {
  if (!is_admissible(g, k))
    throw StrataError(Errc::Inadmissible, "g=" + std::to_string(g) + ", k=" + k.to_string());
  CoverShape s;
  s.g = g;
  s.h = static_cast<int>(quotient_genus(g, k).numerator());
  s.k_sum = k.total();
  s.dim = teich_dimension(s.h, s.k_sum);
  return s;
}

PointType point_type(int d, int type) {
  if (type == 0) return {d, 1, 0};
  const int g = std::gcd(type, d);
  const int m = d / g;
  return {g, m, static_cast<int>(*inverse_mod(type / g, m))};
}

std::vector<FiberOrbit> split_fiber(int d, int type, std::int64_t power) {
  const PointType pt = point_type(d, type);
  const int fiber = pt.fiber;
  const std::int64_t sub = d / std::gcd(mod(power, d), std::int64_t{d});
  const std::int64_t step = mod(power, fiber);
  std::vector<char> seen(fiber, 0);
  std::vector<FiberOrbit> out;
  for (int start = 0; start < fiber; ++start) {
    if (seen[start]) continue;
    int size = 0;
    for (int x = start; !seen[x]; x = static_cast<int>(mod(x + step, fiber))) {
      seen[x] = 1;
      ++size;
    }
    FiberOrbit orb;
    orb.start = start;
    orb.size = size;
    orb.stab = static_cast<int>(sub / size);
    if (orb.stab > 1) {
      // gamma^(type * m / m') rotates by the primitive m'-th root; write it as a power of gamma^power.
      const std::int64_t target = std::int64_t{type} * (pt.stab / orb.stab);
      auto l = discrete_log_additive(power, target, d);
      if (!l) throw StrataError(Errc::InconsistentStabilizer, "stabilizer element outside <gamma^power>");
      orb.new_type = static_cast<int>(*l);
    }
    out.push_back(orb);
  }
  return out;
}

BranchingSequence induced_sequence(const BranchingSequence& k, std::int64_t power) {
  const int d = k.order();
  const int sub = static_cast<int>(d / std::gcd(mod(power, d), std::int64_t{d}));
  if (sub < 2) throw StrataError(Errc::BadInput, "trivial subgroup carries no branching sequence");
  std::vector<int> out(sub - 1, 0);
  for (int i = 1; i < d; ++i) {
    if (k.count(i) == 0) continue;
    for (const auto& orb : split_fiber(d, i, power))
      if (orb.new_type != 0) out[orb.new_type - 1] += k.count(i);
  }
  return {sub, std::move(out)};
}

BranchingSequence restrict_to_subgroup(int g, const BranchingSequence& k, int sub_order) {
  const int d = k.order();
  if (sub_order < 2 || d % sub_order != 0)
    throw StrataError(Errc::NotADivisor,
                      std::to_string(sub_order) + " is not a nontrivial divisor of " + std::to_string(d));
  if (!is_admissible(g, k))
    throw StrataError(Errc::Inadmissible, "g=" + std::to_string(g) + ", k=" + k.to_string());
  return induced_sequence(k, d / sub_order);
}

std::optional<ExceptionalReduction> exceptional_reduction(const BranchingSequence& k) {
  const int d = k.order();
  if (d % 2 != 0 || d < 4) return std::nullopt;
  const int half = d / 2;
  std::vector<int> shape(d - 1, 0);
  std::vector<int> expected(half - 1, 0);
  int which = 0;
  if (half % 2 == 0) {
    which = 1;
    shape[0] += 1;
    shape[half - 1] += 2;
    shape[d - 2] += 1;
    expected[0] += 1;
    expected[half / 2 - 1] += 2;
    expected[half - 2] += 1;
  } else {
    which = 2;
    shape[1] += 1;
    shape[half - 1] += 2;
    shape[d - 3] += 1;
    expected[0] += 1;
    expected[half - 2] += 1;
  }
  if (canonicalize(k).representative != canonicalize(BranchingSequence(d, shape)).representative)
    return std::nullopt;
  return ExceptionalReduction{half, which, BranchingSequence(half, expected)};
}

bool brute_force_realizable(int g, const BranchingSequence& k) {
  const int d = k.order();
  const int n = k.total();
  if (d > 12 || n > 8)
    throw StrataError(Errc::ScaleExceeded, "brute force limited to d <= 12 and k_sum <= 8");

  // Candidate local monodromies per branch point: elements a with the right
  // order whose power a = g*t rotates the tangent by the primitive root.
  std::vector<std::vector<int>> candidates;
  for (int i = 1; i < d; ++i) {
    if (k.count(i) == 0) continue;
    const int g_i = std::gcd(i, d);
    const int m = d / g_i;
    int r = -1;  // gamma^g_i acts as zeta_m^r where r * (i/g_i) = 1 mod m
    for (int x = 0; x < m; ++x)
      if ((std::int64_t{x} * (i / g_i)) % m == 1 % m) { r = x; break; }
    std::vector<int> cand;
    for (int a = 0; a < d; ++a) {
      if (d / std::gcd(a, d) != m || a % g_i != 0) continue;
      if ((std::int64_t{r} * (a / g_i)) % m == 1 % m) cand.push_back(a);
    }
    for (int c = 0; c < k.count(i); ++c) candidates.push_back(cand);
  }

  std::vector<int> chosen(n, 0);
  bool found = false;
  std::function<void(int)> rec = [&](int j) {
    if (found) return;
    if (j == n) {
      std::int64_t ram = 0, sum = 0;
      int gen = d;
      for (int a : chosen) {
        ram += d - std::gcd(a, d);  // fiber has d/ord(a) points
        sum += a;
        gen = std::gcd(gen, a);
      }
      std::int64_t rest = 2 * std::int64_t{g} - 2 - ram;  // = d(2h - 2)
      if (mod(rest, 2 * d) != 0) return;
      std::int64_t h = rest / (2 * d) + 1;
      if (h < 0 || mod(sum, d) != 0) return;
      if (h == 0 && gen != 1) return;
      found = true;
      return;
    }
    for (int a : candidates[j]) {
      chosen[j] = a;
      rec(j + 1);
    }
  };
  rec(0);
  return found;
}

}  // namespace cyclic
