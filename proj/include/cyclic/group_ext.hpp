#pragma once

#include <compare>
#include <vector>

namespace cyclic {

/// <alpha, beta1, beta2 | alpha^d, beta_i^2, beta_i alpha = alpha^(l_i) beta_i,
///  beta1 beta2 = beta2 beta1 alpha^(e12)> together with b3 = beta1 beta2 alpha^f.
struct ExtPresentation {
  int d = 2;
  int l1 = 1;
  int l2 = 1;
  int e12 = 0;
  int f = 0;

  friend auto operator<=>(const ExtPresentation&, const ExtPresentation&) = default;
  friend bool operator==(const ExtPresentation&, const ExtPresentation&) = default;
};

bool satisfies_constraints(const ExtPresentation& p);

/// All constrained tuples, sorted lexicographically by (l1, l2, e12, f).
std::vector<ExtPresentation> enumerate_presentations(int d);

/// Element alpha^a beta1^e1 beta2^e2 is stored as index 4a + 2e1 + e2.
struct GroupTable {
  int d = 0;
  int order = 0;
  std::vector<int> mul;  // order * order

  int operator()(int x, int y) const { return mul[x * order + y]; }
  static int element(int a, int e1, int e2) { return 4 * a + 2 * e1 + e2; }
  int element_order(int x) const;
};

/// Normal form of a word in the letters alpha^k (k != 0 stands for the power),
/// beta1 and beta2, by the rewriting rules. Words are lists of letters
/// 0 = alpha, 1 = beta1, 2 = beta2. Throws InconsistentPresentation when the
/// rewriting does not terminate.
int normal_form(const ExtPresentation& p, const std::vector<int>& word);

/// Builds and verifies the group. Throws InconsistentPresentation.
GroupTable build_group(const ExtPresentation& p);

}  // namespace cyclic
