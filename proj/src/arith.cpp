#include "cyclic/arith.hpp"
#include "cyclic/error.hpp"

namespace cyclic {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NonIntegralGenus: return "NonIntegralGenus";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::UnstableQuotient: return "UnstableQuotient";
    case Errc::NotADivisor: return "NotADivisor";
    case Errc::Inadmissible: return "Inadmissible";
    case Errc::ScaleExceeded: return "ScaleExceeded";
    case Errc::Disconnected: return "Disconnected";
    case Errc::InconsistentStabilizer: return "InconsistentStabilizer";
    case Errc::AssumptionsViolated: return "AssumptionsViolated";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::InconsistentPresentation: return "InconsistentPresentation";
    case Errc::InvalidGraph: return "InvalidGraph";
    case Errc::BadInput: return "BadInput";
  }
  return "Unknown";
}

std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  // extended Euclid on (a mod m, m)
  std::int64_t r0 = mod(a, m), r1 = m, s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) return std::nullopt;
  return mod(s0, m);
}

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int q = 1; q <= n; ++q)
    if (n % q == 0) out.push_back(q);
  return out;
}

std::vector<int> units(int d) {
  if (d == 1) return {0};
  std::vector<int> out;
  for (int u = 1; u < d; ++u)
    if (std::gcd(u, d) == 1) out.push_back(u);
  return out;
}

int euler_phi(int d) { return d == 1 ? 1 : static_cast<int>(units(d).size()); }

std::optional<std::int64_t> discrete_log_additive(std::int64_t a, std::int64_t b, std::int64_t n) {
  a = mod(a, n);
  b = mod(b, n);
  std::int64_t g = std::gcd(a, n);
  if (b % g != 0) return std::nullopt;
  std::int64_t order = n / g;
  auto inv = inverse_mod(a / g, order);
  return mod((b / g) * *inv, order);
}

}  // namespace cyclic
