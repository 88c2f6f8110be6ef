#pragma once

#include <string>

#include "json.hpp"
#include "lcmcap/capacity.hpp"
#include "lcmcap/constructions.hpp"
#include "lcmcap/harmonic.hpp"
#include "lcmcap/lcmfree.hpp"
#include "lcmcap/setfam.hpp"

namespace lcmcap {

// Insertion-ordered JSON keeps every emitted document byte-deterministic.
using Json = nlohmann::ordered_json;

// Rationals and big integers travel as decimal strings — no precision loss.
Json rat_json(const Rat& value);
Json int_json(const Int& value);

// Family documents: {"ground_size": n, "labels": [...]?, "members": [[0-based
// element indices per member], ...]}.
Json family_json(const SetFamily& family);
SetFamily family_from_json(const Json& doc);

// Weighted ground sets: {"labels": [...]?, "weights": ["p/q", ...]}.
Json wgs_json(const WeightedGroundSet& wgs);
WeightedGroundSet wgs_from_json(const Json& doc);

Json fk_json(const FkResult& result);
Json capacity_json(const CapacityResult& result);
Json ledger_json(const HarmonicLedger& ledger);
Json g_constant_json(const TruncatedConstant& constant);
Json params_json(const NDrivenParams& params);
Json freeness_json(const FreenessCheck& check);
Json product_report_json(const ProductConstructionReport& report);
Json family_report_json(const FamilyConstructionReport& report);
Json pipeline_report_json(const WeightedPipelineReport& report);

// Two-space indentation plus a trailing newline, the one true dump format.
std::string dump_json(const Json& doc);

// Parses a whole file (InvalidInput with the parse position on failure).
Json parse_json_file(const std::string& path);
Json parse_json_text(const std::string& text, const std::string& origin);

}  // namespace lcmcap
