#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclic/marked_graph.hpp"

namespace cyclic {

enum class Fullness { Verified, Violated, Unverifiable };
std::string_view to_string(Fullness f);

struct VertexAssumptions {
  int vertex = 0;
  Fullness fullness = Fullness::Verified;
  std::string fullness_note;
  bool positive_dim = true;
};

struct AssumptionReport {
  bool nonsmoothable_ok = false;
  std::vector<VertexAssumptions> vertices;

  bool any_violated() const;
  bool any_unverifiable() const;
};

/// Whether the general member of the smooth stratum (g, k) has Aut = Z/d_i.
/// d_i = 1 is passed as an empty branching sequence.
Fullness fullness_oracle(int genus, int h_order, const std::vector<int>& k, std::string* note = nullptr);

AssumptionReport check_assumptions(const MarkedGraph& g);

/// Automorphisms of the general curve of the stratum that preserve every
/// vertex orbit. Throws AssumptionsViolated.
std::vector<CurveAutomorphism> automorphism_group(const MarkedGraph& g);
/// Search without the assumption check (the group of the combinatorial model).
std::vector<CurveAutomorphism> model_automorphisms(const MarkedGraph& g);

std::vector<CurveAutomorphism> elements_of_order_d(const MarkedGraph& g, const std::vector<CurveAutomorphism>& auts,
                                                   int d);

enum class Reason { CaseA, CaseB, CaseC, ZetaSmoothable };
std::string_view to_string(Reason r);

/// mu_o(beta): number of sigma-cycles inside each vertex orbit.
std::vector<int> cycle_counts(const MarkedGraph& g, const CurveAutomorphism& beta);
/// c_o with beta^(n_o) = (gamma^(n_o))^(c_o) on the orbit; requires mu_o = 1.
std::vector<int> orbit_exponents(const MarkedGraph& g, const CurveAutomorphism& beta);

std::optional<Reason> case1_test(const MarkedGraph& g, const CurveAutomorphism& beta);

struct ZetaDiagnostic {
  int edge = 0;
  int m = 1;
  int exponent = 0;
  bool applies = false;  // node joins distinct components with both branches fixed
};

std::vector<ZetaDiagnostic> zeta_diagnostics(const MarkedGraph& g, const CurveAutomorphism& beta);
/// Throws PreconditionViolated unless case1_test is absent.
bool zeta_condition(const MarkedGraph& g, const CurveAutomorphism& beta);

enum class MaximalityStatus { Maximal, NotMaximal, AssumptionsViolated, AssumptionsUnverifiable };
std::string_view to_string(MaximalityStatus s);

struct MaximalityVerdict {
  MaximalityStatus status = MaximalityStatus::Maximal;
  std::optional<CurveAutomorphism> witness;
  std::optional<Reason> reason;
  std::vector<std::string> detail;
  AssumptionReport assumptions;
};

MaximalityVerdict is_maximal(const MarkedGraph& g);

/// The same curve marked by <beta> (beta of order d), in canonical form.
MarkedGraph materialize(const MarkedGraph& g, const CurveAutomorphism& beta);

}  // namespace cyclic
