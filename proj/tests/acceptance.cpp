// Acceptance gate: one PASS/FAIL line per criterion.
//
// Usage: acceptance [--allow-unattainable N ...]
// Exit status is nonzero when any criterion fails that is not listed.

#include "sectional/catalog.hpp"
#include "sectional/conjecture.hpp"
#include "sectional/errors.hpp"
#include "sectional/genus.hpp"
#include "sectional/scroll.hpp"
#include "sectional/verify.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace sectional;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

Outcome criterion_blowup_example() {
  Outcome o;
  PolarizedVarietyData m = projective_space(5, 2);
  PolarizedVarietyData x = blow_up_point(m);
  InvariantTable tm = invariant_table(m), tx = invariant_table(x);
  o.require(tm.g[2] == 1 && tm.delta[2] == 1, "(P^5,O(2)) g_2 = Delta_2 = 1");
  o.require(tx.g[2] == 1 && tx.delta[2] == 1, "blow-up g_2 = Delta_2 = 1");
  o.require(tm.delta[1] == 16, "Delta_1 = 16");
  o.require(2 * tm.g[1] - 2 == 32 && (2 - 1) * tm.degree == 32, "2g_1 - 2 = 32 = (i-1)L^n");
  o.note << "g_2 = " << tm.g[2] << "/" << tx.g[2] << ", Delta_2 = " << tm.delta[2] << "/" << tx.delta[2]
         << ", Delta_1 = " << tm.delta[1] << ", 2g_1-2 = " << 2 * tm.g[1] - 2;
  return o;
}

Outcome criterion_product_example() {
  Outcome o;
  for (int d = 1; d <= 9; ++d) {
    ConditionReport r = check_conditions(product(abelian(2), del_pezzo_surface(d)), 3);
    o.require(r.details.g_i == 1 && r.details.delta_i == 1 && r.c1 == Tri::False, "d = " + std::to_string(d));
  }
  o.note << "d = 1..9: g_3 = Delta_3 = 1, C(3,1) false";
  return o;
}

Outcome criterion_sectional_genus_anchors() {
  Outcome o;
  for (int n = 2; n <= 8; ++n) {
    InvariantTable t = invariant_table(projective_space(n, 1));
    o.require(2 * t.g[1] - 2 == -2 * t.degree, "P^" + std::to_string(n));
  }
  for (int n = 2; n <= 8; ++n) {
    InvariantTable t = invariant_table(quadric(n));
    o.require(2 * t.g[1] - 2 == -t.degree, "Q^" + std::to_string(n));
  }
  for (int d = 1; d <= 9; ++d) {
    InvariantTable t = invariant_table(del_pezzo_surface(d));
    o.require(2 * t.g[1] - 2 == 0 && t.delta[1] == 1, "Del Pezzo degree " + std::to_string(d));
  }
  o.note << "P^2..P^8, Q^2..Q^8, Del Pezzo 1..9";
  return o;
}

Outcome criterion_route_agreement() {
  Outcome o;
  std::mt19937_64 rng(kDefaultSeed);
  long compared = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    PolarizedVarietyData d = random_instance(rng, 8);
    for (int i = 0; i < d.dim; ++i, ++compared) {
      o.require(sectional_geometric_genus(d, i) == genus_via_alternating_sum(d, i), "random trial " + std::to_string(trial));
    }
  }
  long adjoint = 0;
  for (const auto& e : catalog()) {
    PolarizedVarietyData d = e.build();
    if (!d.adjoint_h0) continue;
    ++adjoint;
    for (int i = 0; i < d.dim; ++i) {
      o.require(sectional_geometric_genus(d, i) == genus_via_adjoint(d, i), e.id + " i=" + std::to_string(i));
    }
  }
  o.note << "1000 random instances (" << compared << " values), " << adjoint << " catalog instances with adjoint data";
  return o;
}

Outcome criterion_reduction() {
  Outcome o;
  long done = 0, skipped = 0;
  for (const auto& e : catalog()) {
    PolarizedVarietyData base = e.build();
    PolarizedVarietyData x;
    try {
      x = blow_up_point(base);
    } catch (const Error&) {
      ++skipped;
      continue;
    }
    ++done;
    InvariantTable tb = invariant_table(base), tx = invariant_table(x);
    for (int i = 1; i <= base.dim; ++i) {
      const auto k = static_cast<std::size_t>(i);
      o.require(tb.g[k] == tx.g[k], e.id + " g_" + std::to_string(i));
      if (i >= 2) o.require(tb.delta[k] == tx.delta[k], e.id + " Delta_" + std::to_string(i));
    }
    // Delta_1 = n + L^n - h^0(L)
    const Integer shift = (degree_Ln(x) - degree_Ln(base)) - (x.h_line[0] - base.h_line[0]);
    o.require(tx.delta[1] - tb.delta[1] == shift, e.id + " Delta_1 shift");
  }
  o.note << done << " blow-ups checked, " << skipped << " entries not blowable (n = 1 or L' not ample)";
  return o;
}

Outcome criterion_segre() {
  Outcome o;
  auto c = [](int j) { return ClassPolynomial::chern(j); };
  ClassPolynomial x = c(1) - c(2) + c(3);
  ClassPolynomial inv = ClassPolynomial::one() + x + x * x + x * x * x;
  o.require(inv.graded_part(3) == c(1) * c(1) * c(1) - c(1) * c(2) * Integer(2) + c(3), "s_3 by series inversion");
  o.require(segre_polynomial(3) == inv.graded_part(3), "segre_polynomial(3)");
  VerifyOptions opts;
  for (const auto& r : run_suite("segre", opts)) {
    o.require(r.ok(), r.messages.empty() ? r.name : r.messages.front());
    o.note << r.checks << " checks (split bundles over P^1..P^3, 50 curve scrolls)";
  }
  return o;
}

Outcome criterion_conjecture_sweep() {
  Outcome o;
  long asserted = 0, products = 0;
  for (const auto& e : catalog()) {
    PolarizedVarietyData d = e.build();
    for (int i = 1; i <= d.dim; ++i) {
      if (d.canonical.multiple() != -(d.dim - i)) continue;
      const Theorem t = theorem_applicability(d.dim, i, d.bs_dim);
      if (t != Theorem::MT2 && t != Theorem::MT3 && t != Theorem::MT4 && t != Theorem::PP3_n) continue;
      ConditionReport r = verify_equivalence(d, i);
      ++asserted;
      o.require(r.c1 == Tri::True && r.c2 && r.c3 && r.c4 && r.c5, e.id + " i=" + std::to_string(i));
    }
    if (e.id.rfind("ex1-product", 0) == 0) {
      ++products;
      ConditionReport r = check_conditions(d, d.dim - 1);
      o.require(r.details.g_i == 1 && r.details.delta_i == 1 && r.c1 == Tri::False, e.id);
    }
  }
  o.require(asserted > 0, "no applicable instance found");
  o.note << asserted << " (instance, i) pairs with K = -(n-i)L in range, " << products << " product instances";
  return o;
}

Outcome criterion_combinatorics() {
  Outcome o;
  // Literal two-sided identity: sum_l (-1)^l C(k,l) p(k-l) = sum_j (-1)^(k-j) C(k,j) p(-(k-j))
  std::mt19937_64 rng(kDefaultSeed);
  std::uniform_int_distribution<int> coef(-9, 9), deg(0, 12);
  std::string counterexample;
  long literal_fail = 0, literal_total = 0;
  auto check_literal = [&](const StdPolynomial& p, const std::string& label) {
    for (int k = 0; k <= 12; ++k) {
      Rational lhs = 0, rhs = 0;
      for (int l = 0; l <= k; ++l) {
        Rational cl = Rational(binomial(k, static_cast<unsigned>(l)));
        lhs += (l % 2 ? Rational(-cl) : cl) * p(Rational(k - l));
        rhs += ((k - l) % 2 ? Rational(-cl) : cl) * p(Rational(-(k - l)));
      }
      ++literal_total;
      if (lhs != rhs) {
        ++literal_fail;
        if (counterexample.empty()) {
          counterexample = label + ", k=" + std::to_string(k) + ": " + lhs.get_str() + " vs " + rhs.get_str();
        }
      }
    }
  };
  check_literal(StdPolynomial::binomial_in(1, 3, 3), "p = C(t+3,3)");
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> cs(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : cs) v = coef(rng);
    check_literal(StdPolynomial(cs), "random");
  }
  o.require(literal_fail == 0, "literal two-sided identity: " + counterexample);

  // What the extraction actually satisfies: chi_k = sum_j (-1)^(k-j) C(k,j) p(-(k-j))
  long corrected_fail = 0;
  std::mt19937_64 rng2(kDefaultSeed + 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> cs(static_cast<std::size_t>(deg(rng2)) + 1);
    for (auto& v : cs) v = coef(rng2);
    StdPolynomial p(cs);
    BinomialPolynomial b = to_binomial_basis(p);
    for (int k = 0; k <= 12; ++k) {
      Rational rhs = 0;
      for (int j = 0; j <= k; ++j) {
        Rational cj = Rational(binomial(k, static_cast<unsigned>(j)));
        rhs += ((k - j) % 2 ? Rational(-cj) : cj) * p(Rational(-(k - j)));
      }
      if (b.chi(k) != rhs) ++corrected_fail;
    }
  }
  long negation_fail = 0;
  for (int m = 1; m <= 12; ++m) {
    for (int k = 0; k <= 12; ++k) {
      Integer sign = k % 2 ? -1 : 1;
      if (binomial(-m, static_cast<unsigned>(k)) != sign * binomial(m + k - 1, static_cast<unsigned>(k))) ++negation_fail;
    }
  }
  o.note << "literal identity fails " << literal_fail << "/" << literal_total;
  if (!counterexample.empty()) o.note << " (" << counterexample << ")";
  o.note << "; negative-point extraction fails " << corrected_fail << "; negation rule fails " << negation_fail << "/156";
  o.require(corrected_fail == 0, "negative-point extraction");
  o.require(negation_fail == 0, "negation rule");
  return o;
}

struct Criterion {
  int number;
  const char* title;
  double budget_seconds;  // 0 for no limit
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> allowed;
  for (int k = 1; k < argc; ++k) {
    if (std::string(argv[k]) == "--allow-unattainable" && k + 1 < argc) allowed.insert(std::atoi(argv[++k]));
  }

  const Criterion criteria[] = {
      {1, "blow-up of (P^5, O(2))", 1.0, criterion_blowup_example},
      {2, "abelian surface x Del Pezzo surface", 1.0, criterion_product_example},
      {3, "sectional genus anchors", 0.0, criterion_sectional_genus_anchors},
      {4, "genus route agreement", 30.0, criterion_route_agreement},
      {5, "reduction invariance", 0.0, criterion_reduction},
      {6, "Segre suite", 10.0, criterion_segre},
      {7, "conjecture equivalence sweep", 0.0, criterion_conjecture_sweep},
      {8, "combinatorics identities", 0.0, criterion_combinatorics},
  };

  int blocking = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << "exception: " << e.what();
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds >= c.budget_seconds) {
      o.pass = false;
      o.note << "; over the " << c.budget_seconds << " s budget";
    }
    std::cout << "criterion " << c.number << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << "  ["
              << o.note.str() << "] " << seconds << " s\n";
    if (!o.pass) {
      if (allowed.count(c.number)) {
        std::cout << "  criterion " << c.number << " is listed as unattainable as stated\n";
      } else {
        ++blocking;
      }
    }
  }
  return blocking == 0 ? 0 : 1;
}
