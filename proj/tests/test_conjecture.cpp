#include "sectional/catalog.hpp"
#include "sectional/conjecture.hpp"
#include "sectional/errors.hpp"

#include <gtest/gtest.h>

using namespace sectional;

TEST(Applicability, Examples) {
  EXPECT_EQ(theorem_applicability(5, 3, 2), Theorem::MT3);
  EXPECT_EQ(theorem_applicability(4, 3, 2), Theorem::None);
  EXPECT_EQ(theorem_applicability(6, 4, 1), Theorem::MT4);
  EXPECT_EQ(theorem_applicability(6, 4, 3), Theorem::None);
  EXPECT_EQ(theorem_applicability(5, 2, 4), Theorem::MT2);
  EXPECT_EQ(theorem_applicability(3, 2, -1), Theorem::MT2);
  EXPECT_EQ(theorem_applicability(4, 4, 3), Theorem::PP3_n);
  EXPECT_EQ(theorem_applicability(2, 2, -1), Theorem::PP3_n);
  EXPECT_EQ(theorem_applicability(3, 1, -1), Theorem::PP0);
  EXPECT_EQ(theorem_applicability(1, 1, -1), Theorem::PP3_n);
  // MT4 with an empty base locus starts at i = 2, but MT2 wins the tie
  EXPECT_EQ(theorem_applicability(7, 2, -1), Theorem::MT2);
  EXPECT_EQ(theorem_applicability(7, 4, -1), Theorem::MT4);
}

TEST(CheckConditions, ProjectiveFiveSpaceDegreeTwo) {
  ConditionReport r = verify_equivalence(projective_space(5, 2), 2);
  EXPECT_EQ(r.c1, Tri::True);
  EXPECT_TRUE(r.c2 && r.c3 && r.c4 && r.c5);
  EXPECT_EQ(r.applicable, Theorem::MT2);
  EXPECT_EQ(r.verdict, Verdict::Holds);
  EXPECT_EQ(r.details.two_g1_minus_2, 32);
  EXPECT_EQ(r.details.expected_two_g1, 32);
}

TEST(CheckConditions, ProjectiveThreeSpace) {
  ConditionReport r = check_conditions(projective_space(3, 1), 2);
  EXPECT_EQ(r.c1, Tri::False);
  EXPECT_FALSE(r.c2 || r.c3 || r.c4 || r.c5);
}

TEST(CheckConditions, AbelianTop) {
  for (int n = 2; n <= 5; ++n) {
    ConditionReport r = verify_equivalence(abelian(n), n);
    EXPECT_EQ(r.c1, Tri::True);
    EXPECT_TRUE(r.c2 && r.c3 && r.c4 && r.c5) << n;
    EXPECT_EQ(r.applicable, Theorem::PP3_n);
    EXPECT_EQ(r.verdict, Verdict::Holds);
  }
}

TEST(CheckConditions, ProductExample) {
  for (int d = 1; d <= 9; ++d) {
    ConditionReport r = verify_equivalence(product(abelian(2), del_pezzo_surface(d)), 3);
    EXPECT_EQ(r.details.g_i, 1);
    EXPECT_EQ(r.details.delta_i, 1);
    EXPECT_EQ(r.c1, Tri::False);
    EXPECT_EQ(r.applicable, Theorem::None);
    EXPECT_EQ(r.verdict, Verdict::NotAsserted);
    // g_3 = 1 alone is not C(3,4): 2g_1 - 2 differs from 2 L^4
    EXPECT_FALSE(r.c4);
  }
}

TEST(CheckConditions, BlowUpExample) {
  PolarizedVarietyData x = blow_up_point(projective_space(5, 2));
  ConditionReport r = verify_equivalence(x, 2);
  EXPECT_EQ(r.details.g_i, 1);
  EXPECT_EQ(r.details.delta_i, 1);
  EXPECT_EQ(r.c1, Tri::False);
  EXPECT_FALSE(r.c2 || r.c4);
  EXPECT_EQ(r.applicable, Theorem::MT2);
  EXPECT_EQ(r.verdict, Verdict::Holds);
}

TEST(CheckConditions, SectionalGenusMode) {
  ConditionReport r = verify_equivalence(projective_space(3, 2), 1);
  EXPECT_EQ(r.applicable, Theorem::PP0);
  EXPECT_EQ(r.c1, Tri::True);
  EXPECT_TRUE(r.c2 && r.c3 && r.c4 && r.c5);
  EXPECT_EQ(r.verdict, Verdict::Holds);

  for (int n = 2; n <= 8; ++n) {
    ConditionReport p = verify_equivalence(projective_space(n, 1), 1);
    ASSERT_TRUE(p.minus_n_plus_1);
    EXPECT_TRUE(p.minus_n_plus_1->first);
    EXPECT_EQ(p.minus_n_plus_1->second, Tri::True);
    EXPECT_EQ(p.verdict, Verdict::Holds);
  }
  for (int n = 2; n <= 8; ++n) {
    ConditionReport q = verify_equivalence(quadric(n), 1);
    ASSERT_TRUE(q.minus_n);
    EXPECT_TRUE(q.minus_n->first);
    EXPECT_EQ(q.minus_n->second, Tri::True);
  }
  for (int d = 1; d <= 9; ++d) {
    ConditionReport s = verify_equivalence(del_pezzo_surface(d), 1);
    EXPECT_EQ(s.c1, Tri::True);
    EXPECT_TRUE(s.c2);
    EXPECT_EQ(s.verdict, Verdict::Holds);
  }
  // elliptic scroll: g_1 = 1 and Delta_1 = 1 type data without K = -(n-1)L
  std::vector<int> a = {1, 1, 1};
  ConditionReport e = verify_equivalence(scroll_over_curve(1, a), 1);
  EXPECT_EQ(e.c1, Tri::False);
  EXPECT_TRUE(e.c5);
  EXPECT_FALSE(e.c2);
}

TEST(VerifyEquivalence, CorruptedInputIsReported) {
  PolarizedVarietyData d = projective_space(5, 2);
  d.canonical = CanonicalAssertion::multiple_of(-2);
  ConditionReport r = verify_equivalence(d, 2);
  EXPECT_EQ(r.verdict, Verdict::Violated);
  EXPECT_FALSE(r.equivalence_ok);
  EXPECT_FALSE(r.audit.empty());
}

TEST(VerifyEquivalence, UnknownCanonicalIsNotAsserted) {
  PolarizedVarietyData d = projective_space(5, 2);
  d.canonical = CanonicalAssertion::unknown();
  ConditionReport r = verify_equivalence(d, 2);
  EXPECT_EQ(r.c1, Tri::Unknown);
  EXPECT_EQ(r.verdict, Verdict::NotAsserted);
}

TEST(VerifyEquivalence, IndexRange) {
  try {
    check_conditions(projective_space(3, 1), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
  }
  EXPECT_THROW(check_conditions(projective_space(3, 1), 4), Error);
}

TEST(VerifyEquivalence, CatalogImplications) {
  for (const auto& e : catalog()) {
    PolarizedVarietyData d = e.build();
    for (int i = 1; i <= d.dim; ++i) {
      ConditionReport r = verify_equivalence(d, i);
      EXPECT_NE(r.verdict, Verdict::Violated) << e.id << " i=" << i;
      EXPECT_TRUE(!r.c2 || r.c3);
      EXPECT_TRUE(!r.c4 || r.c5);
      if (r.c1 == Tri::True) EXPECT_TRUE(r.c2 && r.c4) << e.id << " i=" << i;
    }
  }
}
