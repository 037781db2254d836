#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "cyclic/census.hpp"
#include "cyclic/deformation.hpp"
#include "cyclic/group_ext.hpp"
#include "cyclic/marked_graph.hpp"
#include "cyclic/maximality.hpp"

namespace cyclic {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "cyclic-strata/1";

Json graph_to_json(const MarkedGraph& g);
/// Reads the schema. Optional keys (gamma_edge, rot, stab, loop, swap and the
/// edge stab) are derived when absent. Throws BadInput on malformed input.
MarkedGraph graph_from_json(const Json& j);

Json sequence_to_json(int g, const BranchingSequence& k);
Json character_report(const MarkedGraph& g);
Json dimension_report(const MarkedGraph& g, const StratumDimensionBreakdown& b);
Json automorphism_to_json(const MarkedGraph& g, const CurveAutomorphism& a);
Json verdict_to_json(const MarkedGraph& g, const MaximalityVerdict& v);
Json presentation_to_json(const ExtPresentation& p);

Json entry_to_json(const CensusEntry& e);
CensusEntry entry_from_json(const Json& j);
void write_census(std::ostream& os, const CensusResult& r);
CensusResult read_census(std::istream& is);

}  // namespace cyclic
