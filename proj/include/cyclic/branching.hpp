#pragma once

// Numerical types of smooth irreducible Z/d covers C -> C/G.
//
// A point of type i (1 <= i < d) has stabilizer <gamma^g>, g = gcd(i, d), of
// order m = d/g, and gamma^i acts on its tangent line as the primitive
// rotation exp(2 pi sqrt(-1)/m). Equivalently gamma^g acts as
// exp(2 pi sqrt(-1) r/m) with r = (i/g)^{-1} mod m. Type 0 denotes a point
// with trivial stabilizer.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace cyclic {

using Rational = boost::rational<std::int64_t>;

class BranchingSequence {
 public:
  BranchingSequence(int d, std::vector<int> counts);

  static BranchingSequence zero(int d) { return {d, std::vector<int>(d - 1, 0)}; }

  int order() const { return d_; }
  /// Number of branch points of type i, 1 <= i < d.
  int count(int type) const { return k_.at(type - 1); }
  const std::vector<int>& counts() const { return k_; }
  int total() const;
  std::int64_t weighted_sum() const;
  /// Sum of k_i * (d - gcd(i, d)), the ramification contribution to 2g - 2.
  std::int64_t ramification_degree() const;

  std::string to_string() const;

  friend auto operator<=>(const BranchingSequence&, const BranchingSequence&) = default;
  friend bool operator==(const BranchingSequence&, const BranchingSequence&) = default;

 private:
  int d_;
  std::vector<int> k_;
};

struct CoverShape {
  int g = 0;
  int h = 0;
  int k_sum = 0;
  int dim = 0;
};

struct NumericalTypeClass {
  BranchingSequence representative;
  int orbit_size = 1;

  friend bool operator==(const NumericalTypeClass&, const NumericalTypeClass&) = default;
};

Rational quotient_genus(int g, const BranchingSequence& k);

/// Throws NonIntegralGenus if the Riemann-Hurwitz genus is fractional.
int genus_from_quotient(int h, const BranchingSequence& k);

bool is_admissible(int g, const BranchingSequence& k);

/// Relabels point types i -> u*i mod d. Throws NotAUnit when gcd(u, d) != 1.
BranchingSequence unit_act(int u, const BranchingSequence& k);

NumericalTypeClass canonicalize(const BranchingSequence& k);

/// Every admissible sequence (not up to units) for (g, d), sorted. Accepts any
/// g >= 0 so that rational and elliptic components can be enumerated too.
std::vector<BranchingSequence> admissible_sequences(int g, int d);

/// Admissible classes for (g, d), one per units-orbit, sorted by representative.
std::vector<NumericalTypeClass> enumerate_admissible(int g, int d);

/// 3(h-1) + k_sum clamped at 0; throws UnstableQuotient when 2h-2+k_sum < 0.
int teich_dimension(int h, int k_sum);

/// Smooth-stratum data of an admissible (g, k). Throws Inadmissible otherwise.
CoverShape cover_shape(int g, const BranchingSequence& k);

// Local structure of a point type for Z/d.
struct PointType {
  int fiber = 1;  // points over the branch point: gcd(i, d), or d for type 0
  int stab = 1;   // order of the point stabilizer
  int rot = 0;    // gamma^fiber acts on the tangent as exp(2 pi sqrt(-1) rot/stab)
};
PointType point_type(int d, int type);

// One orbit of <gamma^power> on the fiber of a type-`type` point (fiber
// positions are Z/fiber with gamma acting by +1).
struct FiberOrbit {
  int start = 0;     // smallest fiber position in the orbit
  int size = 0;      // number of points
  int stab = 1;      // stabilizer order inside <gamma^power>
  int new_type = 0;  // type w.r.t. the generator gamma^power (0 if unramified)
};

/// Splits the fiber over a type-`type` point into orbits of <gamma^power>,
/// by explicit orbit/stabilizer enumeration.
std::vector<FiberOrbit> split_fiber(int d, int type, std::int64_t power);

/// Branching sequence of the subgroup <gamma^power> with generator gamma^power.
/// The subgroup must be nontrivial.
BranchingSequence induced_sequence(const BranchingSequence& k, std::int64_t power);

/// Branching sequence of the order-`sub_order` subgroup <gamma^(d/sub_order)>.
BranchingSequence restrict_to_subgroup(int g, const BranchingSequence& k, int sub_order);

struct ExceptionalReduction {
  int sub_order = 0;
  int shape = 0;  // 1: d/2 even, 2: d/2 odd
  BranchingSequence expected;  // the listed reduced sequence
};

/// Recognizes the two index-2 shapes (up to units) over a rational quotient.
std::optional<ExceptionalReduction> exceptional_reduction(const BranchingSequence& k);

/// Search for a generating vector realizing (g, k). Limited to d <= 12 and
/// k_sum <= 8 (throws ScaleExceeded beyond that).
bool brute_force_realizable(int g, const BranchingSequence& k);

}  // namespace cyclic
