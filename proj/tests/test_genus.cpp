#include "sectional/catalog.hpp"
#include "sectional/errors.hpp"
#include "sectional/genus.hpp"

#include <gtest/gtest.h>

using namespace sectional;

namespace {

// classical sectional genus: 2g_1 - 2 = (K + (n-1)L) L^{n-1}
Integer sectional_genus_on_projective_space(int n, int d) {
  Integer dn1 = 1;
  for (int k = 0; k < n - 1; ++k) dn1 *= d;
  Integer two_g_minus_2 = (-(n + 1) + (n - 1) * d) * dn1;
  return two_g_minus_2 / 2 + 1;
}

}  // namespace

TEST(ChiCoefficients, Examples) {
  EXPECT_EQ(chi_coefficients(projective_space(3, 1)), (std::vector<Integer>{1, 1, 1, 1}));
  EXPECT_EQ(chi_coefficients(projective_space(5, 2))[3], 2);

  PolarizedVarietyData bad = projective_space(2, 1);
  bad.chi = StdPolynomial({Rational(1), Rational(1, 3), Rational(1, 2)});
  try {
    chi_coefficients(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_TRUE(e.code() == ErrorCode::NonIntegralCoefficient || e.code() == ErrorCode::InvalidInstance);
  }
}

TEST(SectionalGenus, ProjectiveFiveSpaceDegreeTwo) {
  PolarizedVarietyData d = projective_space(5, 2);
  EXPECT_EQ(sectional_geometric_genus(d, 2), 1);
  EXPECT_EQ(genus_via_alternating_sum(d, 2), 1);
  EXPECT_EQ(genus_via_adjoint(d, 2), 1);
  EXPECT_EQ(delta_genus(d, 1), 16);
  EXPECT_EQ(delta_genus(d, 2), 1);
  EXPECT_EQ(sectional_geometric_genus(d, 1), 17);
  // chi at -1, -2, -3
  EXPECT_EQ(d.chi(Rational(-1)), 0);
  EXPECT_EQ(d.chi(Rational(-2)), 0);
  EXPECT_EQ(d.chi(Rational(-3)), -1);
}

TEST(SectionalGenus, BoundaryValues) {
  for (const auto& e : catalog()) {
    PolarizedVarietyData d = e.build();
    EXPECT_EQ(sectional_geometric_genus(d, 0), degree_Ln(d)) << e.id;
    EXPECT_EQ(sectional_geometric_genus(d, d.dim), d.h_struct.back()) << e.id;
    EXPECT_EQ(delta_genus(d, 0), 0) << e.id;
    EXPECT_EQ(delta_genus(d, d.dim), d.h_struct.back() - d.h_line.back()) << e.id;
  }
}

TEST(SectionalGenus, ClassicalFormulaOnProjectiveSpaces) {
  for (int n = 2; n <= 7; ++n) {
    for (int d = 1; d <= 5; ++d) {
      PolarizedVarietyData x = projective_space(n, d);
      EXPECT_EQ(sectional_geometric_genus(x, 1), sectional_genus_on_projective_space(n, d)) << n << " " << d;
    }
  }
}

TEST(SectionalGenus, RoutesOnSmallExamples) {
  EXPECT_EQ(genus_via_alternating_sum(projective_space(3, 1), 1), 0);
  // abelian 3-fold: 2g_1 - 2 = (K + 2L) L^2 = 2 L^3 = 12
  EXPECT_EQ(genus_via_alternating_sum(abelian(3), 1), 7);
  EXPECT_EQ(sectional_geometric_genus(abelian(3), 1), 7);
  EXPECT_EQ(genus_via_adjoint(product(abelian(2), del_pezzo_surface(3)), 3), 1);
}

TEST(SectionalGenus, AdjointRouteErrors) {
  PolarizedVarietyData d = projective_space(3, 1);
  d.adjoint_h0.reset();
  try {
    genus_via_adjoint(d, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingAdjointData);
  }
  d = projective_space(3, 1);
  d.smooth = false;
  try {
    genus_via_adjoint(d, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSmooth);
  }
  try {
    sectional_geometric_genus(projective_space(3, 1), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
  }
  EXPECT_THROW(genus_via_alternating_sum(projective_space(3, 1), 3), Error);
}

TEST(InvariantTable, Examples) {
  InvariantTable t = invariant_table(projective_space(3, 2));
  EXPECT_EQ(t.g, (std::vector<Integer>{8, 1, 0, 0}));
  EXPECT_EQ(t.delta[1], 1);

  t = invariant_table(quadric(3));
  EXPECT_EQ(t.degree, 2);
  EXPECT_EQ(t.g[1], 0);
  EXPECT_EQ(t.delta[1], 0);

  for (int n = 1; n <= 5; ++n) {
    t = invariant_table(abelian(n));
    EXPECT_EQ(t.g[static_cast<std::size_t>(n)], 1);
    EXPECT_EQ(t.delta[static_cast<std::size_t>(n)], 1);
  }
  for (int n = 1; n <= 8; ++n) {
    t = invariant_table(projective_space(n, 1));
    for (int i = 1; i <= n; ++i) {
      EXPECT_EQ(t.g[static_cast<std::size_t>(i)], 0);
      EXPECT_EQ(t.delta[static_cast<std::size_t>(i)], 0);
    }
  }
  EXPECT_EQ(invariant_table(projective_space(3, 1)).delta[1], 0);
}

TEST(InvariantTable, DeltaOneClosedForm) {
  for (const auto& e : catalog()) {
    PolarizedVarietyData d = e.build();
    InvariantTable t = invariant_table(d);
    EXPECT_EQ(t.delta[1], d.dim + t.degree - d.h_line[0]) << e.id;
    EXPECT_EQ(t.chi_coeffs.back(), t.degree) << e.id;
  }
}
