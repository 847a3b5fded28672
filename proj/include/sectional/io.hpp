#pragma once

// JSON documents for instances and Chern tables.
//
// Instance:
//   {"name": str, "dim": int,
//    "chi": {"values": [[t, "p/q"], ...]} or {"coeffs": ["p/q", ...]},
//    "hO": [int, ...], "hL": [int, ...], "adjointH0": [int, ...]?,
//    "smooth": bool, "bsDim": int, "canonicalMultiple": int | "none"?}
//
// Chern table:
//   {"baseDim": int, "rank": int, "hOBase": [int, ...], "table": {"K.c1": int, ...}}
//
// Integers may be JSON numbers or decimal strings; rationals are "p/q" strings
// or JSON integers.

#include "sectional/genus.hpp"
#include "sectional/polarized.hpp"
#include "sectional/scroll.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace sectional {

using Json = nlohmann::ordered_json;

/// Throws Error(ParseError) naming the offending field. Also accepts the
/// {"instance": ..., "invariants": ...} records written by the CLI.
PolarizedVarietyData instance_from_json(const Json& j);
/// Hilbert polynomial stored as power-basis coefficients.
Json to_json(const PolarizedVarietyData& d);

Json to_json(const InvariantTable& t);

ChernData chern_data_from_json(const Json& j);
Json to_json(const ChernData& cd);

/// A document plus the line it starts on, for diagnostics.
struct LoadedInstance {
  int line = 1;
  PolarizedVarietyData data;
};

/// Reads one JSON object, a JSON array of objects, or JSON Lines. Errors
/// carry "path:line: message". Instances are validated.
std::vector<LoadedInstance> load_instances(const std::filesystem::path& path);

ChernData load_chern_data(const std::filesystem::path& path);

}  // namespace sectional
