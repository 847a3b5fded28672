#pragma once

// Constructors for the polarized varieties exercised by the checks, and the
// product and point blow-up operations on instances.
//
// Adjoint tables h^0(K_X + kL) come from closed forms that do not go through
// chi, so the adjoint route to g_i is an independent cross-check on them.

#include "sectional/polarized.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sectional {

/// (P^n, O(d)).
PolarizedVarietyData projective_space(int n, int d);

/// (Q^n, O(1)) for a smooth quadric Q^n in P^{n+1}, n >= 2.
PolarizedVarietyData quadric(int n);

/// Principally polarized abelian variety (H^n = n!). The base locus of a
/// principal polarization is the theta divisor, so bs_dim defaults to n - 1.
PolarizedVarietyData abelian(int n, std::optional<int> bs_dim = std::nullopt);

/// Del Pezzo surface of degree d polarized by -K.
PolarizedVarietyData del_pezzo_surface(int d);

/// (Y x F, p1^*H + p2^*A) via Kunneth.
PolarizedVarietyData product(const PolarizedVarietyData& y, const PolarizedVarietyData& f);

/// Blow-up at a general point with L' = pi^*L - E. Throws NotSmooth,
/// DimensionTooSmall, or InvalidInstance when the result is not a valid
/// polarized instance (e.g. L'^n = 0).
PolarizedVarietyData blow_up_point(const PolarizedVarietyData& d);

PolarizedVarietyData scroll_over_curve(int genus, std::span<const int> degrees);

struct CatalogEntry {
  std::string id;
  std::string description;
  std::function<PolarizedVarietyData()> build;
};

const std::vector<CatalogEntry>& catalog();

/// (id, description) in a stable order.
std::vector<std::pair<std::string, std::string>> list_catalog();

/// Throws Error(InvalidArgument) for an unknown id.
PolarizedVarietyData catalog_instance(const std::string& id);

}  // namespace sectional
