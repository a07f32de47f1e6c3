#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qp/bounds.hpp"
#include "qp/construct.hpp"
#include "qp/sequence.hpp"
#include "qp/structure.hpp"
#include "qp/topograph.hpp"

namespace qp {

using Json = nlohmann::json;

std::string rat_to_string(const Rat& r);      // "p/q"
Rat rat_from_string(const std::string& s);    // accepts "p" or "p/q"

Json topograph_to_json(const TopoGraph& g);
TopoGraph topograph_from_json(const Json& j);

/// Sequence text format: one sequence per line, whitespace-separated tokens,
/// tokens mapped to symbol ids in first-occurrence order.
std::vector<Sequence> sequences_from_text(const std::string& text);

Json witness_to_json(const PatternWitness& w);
Json violation_to_json(const Violation& v);
Json bound_report_to_json(const BoundReport& r);
Json separator_to_json(const SeparatorResult& s);
Json decomposition_to_json(const Decomposition& d);
Json sequence_pair_to_json(const SequencePair& p);

}  // namespace qp
