#include "sectional/conjecture.hpp"

#include "sectional/errors.hpp"
#include "sectional/genus.hpp"

#include <algorithm>

namespace sectional {

std::string_view to_string(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

Tri to_tri(std::optional<bool> b) {
  if (!b) return Tri::Unknown;
  return *b ? Tri::True : Tri::False;
}

std::string_view to_string(Theorem t) {
  switch (t) {
    case Theorem::MT2: return "MT2";
    case Theorem::MT3: return "MT3";
    case Theorem::MT4: return "MT4";
    case Theorem::PP3_n: return "PP3_n";
    case Theorem::PP0: return "PP0";
    case Theorem::None: return "None";
  }
  return "None";
}

std::string_view hypothesis(Theorem t) {
  switch (t) {
    case Theorem::MT2: return "i = 2, n >= 3";
    case Theorem::MT3: return "i = 3, n >= 5";
    case Theorem::MT4: return "max{2, dim Bs|L| + 2} <= i <= n - 1, n >= 3";
    case Theorem::PP3_n: return "i = n (per-polarization)";
    case Theorem::PP0: return "i = 1, n >= 2 (C(1,1) <=> C(1,2) only)";
    case Theorem::None: return "no theorem covers this (n, i, dim Bs|L|)";
  }
  return "";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "VIOLATED";
    case Verdict::NotAsserted: return "not asserted";
  }
  return "";
}

Theorem theorem_applicability(int n, int i, int bs_dim) {
  if (i == 1 && n >= 2) return Theorem::PP0;
  if (i == 2 && n >= 3) return Theorem::MT2;
  if (i == 3 && n >= 5) return Theorem::MT3;
  if (n >= 3 && std::max(2, bs_dim + 2) <= i && i <= n - 1) return Theorem::MT4;
  if (i == n && n >= 1) return Theorem::PP3_n;
  return Theorem::None;
}

ConditionReport check_conditions(const PolarizedVarietyData& d, int i) {
  const int n = d.dim;
  if (i < 1 || i > n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "condition index " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
  }
  InvariantTable table = invariant_table(d);
  const auto idx = static_cast<std::size_t>(i);

  ConditionReport r;
  r.n = n;
  r.i = i;
  auto& det = r.details;
  det.delta_i = table.delta[idx];
  det.g_i = table.g[idx];
  det.g_1 = table.g[1];
  det.delta_1 = table.delta[1];
  det.degree = table.degree;
  det.two_g1_minus_2 = 2 * det.g_1 - 2;
  det.expected_two_g1 = (i - 1) * det.degree;

  const bool genus_eq = det.two_g1_minus_2 == det.expected_two_g1;
  r.c1 = to_tri(d.canonical.equals_multiple(-(n - i)));
  r.c2 = det.delta_i == 1 && genus_eq;
  r.c3 = det.delta_i > 0 && genus_eq;
  r.c4 = det.g_i == 1 && genus_eq;
  r.c5 = det.g_i > 0 && genus_eq;
  r.applicable = theorem_applicability(n, i, d.bs_dim);

  if (i == 1) {
    r.minus_n_plus_1 = std::pair{det.two_g1_minus_2 == -2 * det.degree,
                                 to_tri(d.canonical.equals_multiple(-(n + 1)))};
    r.minus_n = std::pair{det.two_g1_minus_2 == -det.degree,
                          to_tri(d.canonical.equals_multiple(-n))};
  }
  return r;
}

ConditionReport verify_equivalence(const PolarizedVarietyData& d, int i) {
  ConditionReport r = check_conditions(d, i);
  if (r.applicable == Theorem::None || r.c1 == Tri::Unknown) {
    r.verdict = Verdict::NotAsserted;
    return r;
  }
  const bool c1 = r.c1 == Tri::True;
  if (r.applicable == Theorem::PP0) {
    r.equivalence_ok = c1 == r.c2;
    auto check_anchor = [&](const std::optional<std::pair<bool, Tri>>& anchor) {
      if (anchor && anchor->second != Tri::Unknown) {
        r.equivalence_ok = r.equivalence_ok && anchor->first == (anchor->second == Tri::True);
      }
    };
    check_anchor(r.minus_n_plus_1);
    check_anchor(r.minus_n);
  } else {
    r.equivalence_ok = c1 == r.c2 && c1 == r.c3 && c1 == r.c4 && c1 == r.c5;
  }
  r.verdict = r.equivalence_ok ? Verdict::Holds : Verdict::Violated;
  if (!r.equivalence_ok) {
    r.audit.push_back("canonical class assertion (K_X = " + std::to_string(-(r.n - r.i)) +
                      " L claimed " + std::string(to_string(r.c1)) + ")");
    r.audit.push_back("h^j(O_X) and h^j(L) tables, which enter Delta_i and g_i");
    r.audit.push_back("Hilbert polynomial chi(tL), which fixes L^n, g_1 and g_i");
    r.audit.push_back("dim Bs|L| = " + std::to_string(d.bs_dim) + ", which selected " +
                      std::string(to_string(r.applicable)));
  }
  return r;
}

}  // namespace sectional
