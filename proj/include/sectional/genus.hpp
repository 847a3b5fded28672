#pragma once

// Sectional geometric genera g_i and Delta-genera Delta_i of a polarized
// variety, computed from its Hilbert polynomial and cohomology tables.

#include "sectional/exact.hpp"
#include "sectional/polarized.hpp"

#include <vector>

namespace sectional {

/// chi_0 .. chi_n of chi(tL) in the basis C(t+j-1, j). Every entry must be an
/// integer; otherwise throws NonIntegralCoefficient.
std::vector<Integer> chi_coefficients(const PolarizedVarietyData& d);

/// g_i = (-1)^i (chi_{n-i} - chi(O_X)) + sum_{j=0}^{n-i} (-1)^{n-i-j} h^{n-j}(O_X).
Integer sectional_geometric_genus(const PolarizedVarietyData& d, int i);

/// g_i from chi evaluated at the negative multiples -(n-i-j)L, 0 <= i <= n-1.
/// Holds for any polynomial chi, so no positivity hypothesis is checked.
Integer genus_via_alternating_sum(const PolarizedVarietyData& d, int i);

/// g_i from h^0(K_X + kL), 0 <= i <= n-1. Needs a smooth instance with
/// adjoint data.
Integer genus_via_adjoint(const PolarizedVarietyData& d, int i);

/// Delta_0 = 0, Delta_i = g_{i-1} - Delta_{i-1} + (n-i+1) h^{i-1}(O_X) - h^{i-1}(L).
Integer delta_genus(const PolarizedVarietyData& d, int i);

struct InvariantTable {
  int dim = 0;
  Integer degree;                 // L^n
  std::vector<Integer> chi_coeffs;
  std::vector<Integer> g;
  std::vector<Integer> delta;
};

/// All chi_j, g_i, Delta_i. Throws Error(InvalidInstance) for invalid input
/// and std::logic_error if a boundary identity fails on the computed table.
InvariantTable invariant_table(const PolarizedVarietyData& d);

}  // namespace sectional
