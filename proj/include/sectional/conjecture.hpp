#pragma once

// Conditions C(i,1)..C(i,5) characterizing K_X = -(n-i)L, and the ranges of
// (n, i, dim Bs|L|) in which their equivalence is a theorem.
//
//   C(i,1): K_X = -(n-i)L
//   C(i,2): Delta_i = 1 and 2g_1 - 2 = (i-1)L^n
//   C(i,3): Delta_i > 0 and 2g_1 - 2 = (i-1)L^n
//   C(i,4): g_i = 1     and 2g_1 - 2 = (i-1)L^n
//   C(i,5): g_i > 0     and 2g_1 - 2 = (i-1)L^n

#include "sectional/exact.hpp"
#include "sectional/polarized.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sectional {

enum class Tri { False, True, Unknown };

std::string_view to_string(Tri t);
Tri to_tri(std::optional<bool> b);

/// Result which certifies the equivalence. PP0 is the i = 1 (sectional genus
/// and Delta-genus) case, where only C(1,1) <=> C(1,2) holds.
enum class Theorem { MT2, MT3, MT4, PP3_n, PP0, None };

std::string_view to_string(Theorem t);
/// Human-readable hypothesis range for the tag.
std::string_view hypothesis(Theorem t);

/// First match in the order PP0 (i = 1, n >= 2), MT2 (i = 2, n >= 3),
/// MT3 (i = 3, n >= 5), MT4 (max{2, bs_dim + 2} <= i <= n - 1, n >= 3),
/// PP3_n (i = n), otherwise None.
Theorem theorem_applicability(int n, int i, int bs_dim);

enum class Verdict { Holds, Violated, NotAsserted };

std::string_view to_string(Verdict v);

struct ConditionDetails {
  Integer delta_i;
  Integer g_i;
  Integer g_1;
  Integer degree;              // L^n
  Integer two_g1_minus_2;
  Integer expected_two_g1;     // (i-1) L^n
  Integer delta_1;
};

struct ConditionReport {
  int n = 0;
  int i = 0;
  Tri c1 = Tri::Unknown;
  bool c2 = false;
  bool c3 = false;
  bool c4 = false;
  bool c5 = false;
  Theorem applicable = Theorem::None;
  Verdict verdict = Verdict::NotAsserted;
  /// Only meaningful when verdict != NotAsserted.
  bool equivalence_ok = false;
  ConditionDetails details;
  /// i = 1 only: the sectional-genus characterizations of K = -(n+1)L and
  /// K = -nL, as (numerical side, canonical side) pairs.
  std::optional<std::pair<bool, Tri>> minus_n_plus_1;
  std::optional<std::pair<bool, Tri>> minus_n;
  /// Inputs to audit when verdict == Violated.
  std::vector<std::string> audit;
};

/// Evaluates C(i,1)..C(i,5) for 1 <= i <= n and tags the applicable theorem.
/// Leaves verdict as NotAsserted.
ConditionReport check_conditions(const PolarizedVarietyData& d, int i);

/// check_conditions plus the equivalence verdict. A violated equivalence is
/// reported, never thrown.
ConditionReport verify_equivalence(const PolarizedVarietyData& d, int i);

}  // namespace sectional
