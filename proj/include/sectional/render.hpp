#pragma once

// Plain-text renderings for the CLI.

#include "sectional/conjecture.hpp"
#include "sectional/genus.hpp"
#include "sectional/io.hpp"
#include "sectional/polarized.hpp"
#include "sectional/scroll.hpp"

#include <string>

namespace sectional {

std::string render_invariants(const PolarizedVarietyData& d, const InvariantTable& t);
std::string render_report(const PolarizedVarietyData& d, const ConditionReport& r);
Json to_json(const ConditionReport& r);

/// Symbolic s_1 .. s_m.
std::string render_segre_symbolic(int base_dim);
/// Numeric Segre pairings and scroll degrees for a table.
std::string render_segre_numeric(const ChernData& cd);

std::string render_catalog();

}  // namespace sectional
