#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace cyclic {

// Non-negative residue of a modulo m (m > 0).
constexpr std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

constexpr std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
constexpr std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

/// Inverse of a modulo m, if gcd(a, m) = 1. For m = 1 the inverse is 0.
std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t m);

/// Additive order of a in Z/m.
constexpr std::int64_t additive_order(std::int64_t a, std::int64_t m) {
  return m / std::gcd(mod(a, m), m);
}

/// Positive divisors of n in increasing order.
std::vector<int> divisors(int n);

/// Units of Z/d in increasing order; {0} for d = 1 by convention.
std::vector<int> units(int d);

/// Euler's totient.
int euler_phi(int d);

/// Unique x in [0, m) with a*x = b (mod n) restricted to the subgroup of order m
/// generated by a, i.e. solves x*a = b in Z/n when b lies in <a>. Empty otherwise.
std::optional<std::int64_t> discrete_log_additive(std::int64_t a, std::int64_t b, std::int64_t n);

}  // namespace cyclic
