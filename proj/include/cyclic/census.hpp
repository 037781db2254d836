#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclic/marked_graph.hpp"
#include "cyclic/maximality.hpp"

namespace cyclic {

/// Zero means the natural bound forced by stability (2g - 2 vertices, 3g - 3 edges).
struct CensusLimits {
  int max_vertices = 0;
  int max_edges = 0;
};

struct CensusEntry {
  Encoding encoding;
  int genus = 0;
  int dimension = 0;
  bool nonsmoothable = false;
  MaximalityStatus verdict = MaximalityStatus::Maximal;
  std::optional<Reason> reason;
  std::string witness_summary;

  friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

struct CensusResult {
  int g = 0;
  int d = 0;
  CensusLimits limits;  // effective limits
  bool complete = true;
  std::vector<CensusEntry> entries;  // sorted by encoding
};

/// Every equivariantly non-smoothable G-marked stable curve type of genus g.
/// Types needing more vertices or edges than the limits allow are skipped and
/// reported through complete = false.
CensusResult enumerate_strata(int g, int d, CensusLimits limits = {}, int threads = 1);

/// Throws ScaleExceeded if the census was truncated.
void require_complete(const CensusResult& r);

struct ComponentList {
  std::vector<CensusEntry> maximal;
  std::vector<CensusEntry> unverifiable;
};

ComponentList components(const CensusResult& census);

/// Census entry for one graph (dimension and verdict).
CensusEntry make_entry(const MarkedGraph& g);

/// Graph types enumerated before the non-smoothability filter; used by tests.
std::vector<Encoding> enumerate_types(int g, int d, CensusLimits limits, bool nonsmoothable_only, bool* complete);

}  // namespace cyclic
