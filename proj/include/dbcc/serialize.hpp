#pragma once

#include <string>

#include <json.hpp>

#include "dbcc/analysis.hpp"
#include "dbcc/construct.hpp"
#include "dbcc/coverage.hpp"
#include "dbcc/search.hpp"

namespace dbcc {

// Stable JSON forms for the report types. nlohmann::json orders keys
// alphabetically, so a fixed value set serializes to fixed bytes. Exact
// integers are JSON numbers up to 64 bits and decimal strings beyond that;
// real-valued fields that overflow a double serialize as null.

nlohmann::json to_json(const SpaceDescriptor& space);
nlohmann::json to_json(const CoverageReport& report);
nlohmann::json to_json(const ConstructionResult& result);
nlohmann::json to_json(const BoundsReport& report);
nlohmann::json to_json(const OverlapStats& stats, std::uint64_t seed, bool sampled);
nlohmann::json to_json(const JansonInputs& inputs);
nlohmann::json to_json(const SearchResult& result);

/// Fixed-header CSV for overlap sweeps: one row per (n, R, k).
std::string overlap_csv_header();
void append_overlap_csv(std::string& out, const OverlapStats& stats);

} // namespace dbcc
