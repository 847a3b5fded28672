#include "sectional/verify.hpp"

#include "sectional/catalog.hpp"
#include "sectional/conjecture.hpp"
#include "sectional/errors.hpp"
#include "sectional/genus.hpp"
#include "sectional/scroll.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace sectional {

namespace {

constexpr std::size_t kMaxMessages = 8;
constexpr int kCurveScrollPairs = 50;

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& what) {
    ++result_.checks;
    if (ok) return;
    ++result_.failures;
    if (result_.messages.size() < kMaxMessages) result_.messages.push_back(what());
  }
  void skip(const std::string& what) {
    ++result_.skipped;
    if (result_.messages.size() < kMaxMessages) result_.messages.push_back("skipped: " + what);
  }
  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

StdPolynomial random_polynomial(std::mt19937_64& rng, int max_degree) {
  const int deg = uniform(rng, 0, max_degree);
  std::vector<Rational> c;
  for (int k = 0; k <= deg; ++k) {
    Rational q(uniform(rng, -20, 20), uniform(rng, 1, 6));
    q.canonicalize();
    c.push_back(q);
  }
  return StdPolynomial(std::move(c));
}

// sum_l (-1)^l C(k,l) p(-l), evaluated term by term
Rational negative_point_chi(const StdPolynomial& p, int k) {
  Rational s = 0;
  for (int l = 0; l <= k; ++l) {
    Rational term = Rational(binomial(k, static_cast<unsigned>(l))) * p(Rational(-l));
    s += (l % 2 == 0) ? term : Rational(-term);
  }
  return s;
}

// e_k(a) by enumerating k-subsets
Integer elementary_by_subsets(const std::vector<int>& a, int k) {
  Integer total = 0;
  const std::size_t n = a.size();
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    if (__builtin_popcountl(mask) != k) continue;
    Integer prod = 1;
    for (std::size_t b = 0; b < n; ++b) {
      if (mask & (1UL << b)) prod *= a[b];
    }
    total += prod;
  }
  return total;
}

// h_k(a) by enumerating exponent vectors summing to k
Integer complete_homogeneous(const std::vector<int>& a, int k) {
  std::function<Integer(std::size_t, int)> go = [&](std::size_t idx, int left) -> Integer {
    if (idx == a.size()) return left == 0 ? Integer(1) : Integer(0);
    Integer total = 0;
    Integer power = 1;
    for (int e = 0; e <= left; ++e) {
      total += power * go(idx + 1, left - e);
      power *= a[idx];
    }
    return total;
  };
  return go(0, k);
}

std::string instance_label(const PolarizedVarietyData& d) {
  return "'" + d.name + "' (n = " + std::to_string(d.dim) + ")";
}

SuiteResult suite_basis(const VerifyOptions& o) {
  Recorder rec("basis");
  std::mt19937_64 rng(o.seed);
  const long trials = std::max<long>(1, std::min<long>(o.trials, 500));
  for (long trial = 0; trial < trials; ++trial) {
    StdPolynomial p = random_polynomial(rng, 12);
    BinomialPolynomial b = to_binomial_basis(p);
    rec.expect(from_binomial_basis(b) == p, [&] { return "round trip failed for " + format_polynomial(p); });
    for (int k = 0; k <= std::max(p.degree(), 0); ++k) {
      rec.expect(b.chi(k) == negative_point_chi(p, k), [&] {
        return "chi_" + std::to_string(k) + " disagrees with the negative-point sum for " + format_polynomial(p);
      });
    }
    std::vector<Sample> samples;
    const int deg = std::max(p.degree(), 0);
    for (int t = -3; t <= deg - 2; ++t) samples.push_back({t, p(Rational(t))});
    rec.expect(interpolate(samples, deg) == p, [&] { return "interpolation failed for " + format_polynomial(p); });
  }
  for (int n = 0; n <= 12; ++n) {
    BinomialPolynomial b = to_binomial_basis(StdPolynomial::binomial_in(1, n, static_cast<unsigned>(n)));
    bool ones = b.degree() == n;
    for (int j = 0; j <= n; ++j) ones = ones && b.chi(j) == 1;
    rec.expect(ones, [&] { return "C(t+" + std::to_string(n) + "," + std::to_string(n) + ") is not all ones"; });
  }
  for (int m = 1; m <= 12; ++m) {
    for (int k = 0; k <= 12; ++k) {
      Integer sign = k % 2 == 0 ? 1 : -1;
      rec.expect(binomial(-m, static_cast<unsigned>(k)) == sign * binomial(m + k - 1, static_cast<unsigned>(k)),
                 [&] { return "negation rule fails at m=" + std::to_string(m) + ", k=" + std::to_string(k); });
    }
  }
  return rec.take();
}

SuiteResult suite_genus_routes(const VerifyOptions& o) {
  Recorder rec("genus-routes");
  std::mt19937_64 rng(o.seed);
  for (long trial = 0; trial < o.trials; ++trial) {
    PolarizedVarietyData d = random_instance(rng);
    for (int i = 0; i < d.dim; ++i) {
      rec.expect(sectional_geometric_genus(d, i) == genus_via_alternating_sum(d, i), [&] {
        return "negative-point route disagrees at i=" + std::to_string(i) + " on random " + instance_label(d);
      });
    }
  }
  for (const auto& e : catalog()) {
    PolarizedVarietyData d = e.build();
    if (!d.adjoint_h0) {
      rec.skip(e.id + " has no adjoint data");
      continue;
    }
    for (int i = 0; i < d.dim; ++i) {
      const Integer g = sectional_geometric_genus(d, i);
      rec.expect(g == genus_via_alternating_sum(d, i), [&] {
        return e.id + ": negative-point route disagrees at i=" + std::to_string(i);
      });
      rec.expect(g == genus_via_adjoint(d, i), [&] {
        return e.id + ": adjoint route gives " + genus_via_adjoint(d, i).get_str() + " at i=" + std::to_string(i) +
               ", expected " + g.get_str();
      });
    }
  }
  return rec.take();
}

void delta_checks(Recorder& rec, const PolarizedVarietyData& d, const std::string& label) {
  InvariantTable t = invariant_table(d);
  const int n = d.dim;
  auto at = [](const std::vector<Integer>& v, int k) { return v[static_cast<std::size_t>(k)]; };
  rec.expect(at(t.delta, 0) == 0, [&] { return label + ": Delta_0 != 0"; });
  rec.expect(at(t.g, 0) == t.degree, [&] { return label + ": g_0 != L^n"; });
  rec.expect(at(t.g, n) == at(d.h_struct, n), [&] { return label + ": g_n != h^n(O)"; });
  rec.expect(at(t.delta, n) == at(d.h_struct, n) - at(d.h_line, n), [&] { return label + ": Delta_n closed form"; });
  rec.expect(at(t.delta, 1) == n * at(d.h_struct, 0) + t.degree - at(d.h_line, 0),
             [&] { return label + ": Delta_1 != n + L^n - h^0(L)"; });
  for (int i = 1; i <= n; ++i) {
    const Integer rearranged = at(t.g, i - 1) - at(t.delta, i) + (n - i + 1) * at(d.h_struct, i - 1) - at(d.h_line, i - 1);
    rec.expect(at(t.delta, i - 1) == rearranged, [&] { return label + ": rearranged recursion fails at i=" + std::to_string(i); });
    rec.expect(delta_genus(d, i) == at(t.delta, i), [&] { return label + ": delta_genus disagrees with table"; });
  }
}

SuiteResult suite_delta_recursion(const VerifyOptions& o) {
  Recorder rec("delta-recursion");
  std::mt19937_64 rng(o.seed ^ 0x9e3779b97f4a7c15ULL);
  for (long trial = 0; trial < o.trials; ++trial) {
    PolarizedVarietyData d = random_instance(rng);
    delta_checks(rec, d, "random " + instance_label(d));
  }
  for (const auto& e : catalog()) delta_checks(rec, e.build(), e.id);
  return rec.take();
}

SuiteResult suite_segre(const VerifyOptions& o) {
  Recorder rec("segre");
  // sum_{k=0..j} (-1)^k c_k s_{j-k} = 0
  for (int j = 1; j <= 3; ++j) {
    ClassPolynomial sum;
    for (int k = 0; k <= j; ++k) {
      ClassPolynomial term = ClassPolynomial::chern(k) * segre_polynomial(j - k);
      if (k % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    rec.expect(sum.is_zero(), [&] { return "inversion relation fails in degree " + std::to_string(j); });
  }
  const ClassPolynomial c1 = ClassPolynomial::chern(1);
  const ClassPolynomial c2 = ClassPolynomial::chern(2);
  const ClassPolynomial c3 = ClassPolynomial::chern(3);
  rec.expect(segre_polynomial(1) == c1, [] { return "s_1 != c1"; });
  rec.expect(segre_polynomial(2) == c1 * c1 - c2, [] { return "s_2 != c1^2 - c2"; });
  rec.expect(segre_polynomial(3) == c1 * c1 * c1 - c1 * c2 * Integer(2) + c3,
             [] { return "s_3 != c1^3 - 2 c1 c2 + c3, got " + segre_polynomial(3).to_string(); });

  std::mt19937_64 rng(o.seed + 1);
  for (int m = 1; m <= 3; ++m) {
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<int> a(static_cast<std::size_t>(uniform(rng, 1, 5)));
      for (auto& x : a) x = uniform(rng, 1, 6);
      ChernData cd = split_bundle_on_projective_space(m, a);
      std::string label = "split bundle on P^" + std::to_string(m);
      for (const auto& [mono, value] : cd.table) {
        Integer expected = 1;
        for (int k = 0; k < mono.k; ++k) expected *= -(m + 1);
        for (int k = 0; k < mono.chern.e1; ++k) expected *= elementary_by_subsets(a, 1);
        for (int k = 0; k < mono.chern.e2; ++k) expected *= elementary_by_subsets(a, 2);
        for (int k = 0; k < mono.chern.e3; ++k) expected *= elementary_by_subsets(a, 3);
        rec.expect(value == expected, [&] { return label + ": entry " + spell(mono) + " differs"; });
      }
      // The Segre classes of a split bundle are complete homogeneous sums.
      rec.expect(scroll_degree(cd) == complete_homogeneous(a, m), [&] { return label + ": s_m != h_m(a)"; });
      const Integer cl0 = complete_homogeneous(a, m - 1) * complete_homogeneous(a, 1) - complete_homogeneous(a, m) -
                          (m + 1) * complete_homogeneous(a, m - 1);
      rec.expect(scroll_adjoint_degree(cd) == cl0, [&] { return label + ": adjoint degree differs"; });
    }
  }

  for (int trial = 0; trial < kCurveScrollPairs; ++trial) {
    const int genus = uniform(rng, 0, 6);
    std::vector<int> a(static_cast<std::size_t>(uniform(rng, 1, 5)));
    long d = 0;
    for (auto& x : a) {
      x = uniform(rng, 1, 9);
      d += x;
    }
    PolarizedVarietyData x = scroll_over_curve_data(genus, a);
    InvariantTable t = invariant_table(x);
    rec.expect(t.g[1] == genus, [&] { return "curve scroll g_1 = " + t.g[1].get_str() + ", base genus " + std::to_string(genus); });

    ChernData curve;
    curve.base_dim = 1;
    curve.rank = static_cast<int>(a.size());
    curve.h_struct_base = {1, genus};
    curve.table[TableMonomial{1, {}}] = 2 * genus - 2;
    curve.table[TableMonomial{0, {1, 0, 0}}] = d;
    rec.expect(scroll_degree(curve) == t.degree, [&] { return "curve scroll: s_1 != L^n"; });
    rec.expect(scroll_adjoint_degree(curve) == 2 * t.g[1] - 2, [&] { return "curve scroll: adjoint degree != 2g_1 - 2"; });
  }
  return rec.take();
}

SuiteResult suite_reduction(const VerifyOptions&) {
  Recorder rec("reduction");
  for (const auto& e : catalog()) {
    PolarizedVarietyData base = e.build();
    PolarizedVarietyData blown;
    try {
      blown = blow_up_point(base);
    } catch (const Error& err) {
      rec.skip(e.id + " (" + std::string(to_string(err.code())) + ")");
      continue;
    }
    InvariantTable tb = invariant_table(base);
    InvariantTable tx = invariant_table(blown);
    const int n = base.dim;
    for (int i = 1; i <= n; ++i) {
      const auto k = static_cast<std::size_t>(i);
      rec.expect(tb.g[k] == tx.g[k], [&] { return e.id + ": g_" + std::to_string(i) + " changed under blow-up"; });
      if (i >= 2) {
        rec.expect(tb.delta[k] == tx.delta[k], [&] { return e.id + ": Delta_" + std::to_string(i) + " changed under blow-up"; });
      }
    }
    // Delta_1 = n h^0(O) + L^n - h^0(L)
    const Integer shift = (degree_Ln(blown) - degree_Ln(base)) - (blown.h_line[0] - base.h_line[0]);
    rec.expect(tx.delta[1] - tb.delta[1] == shift, [&] { return e.id + ": Delta_1 shift"; });
  }
  return rec.take();
}

SuiteResult suite_conjecture(const VerifyOptions&) {
  Recorder rec("conjecture");
  for (const auto& e : catalog()) {
    PolarizedVarietyData d = e.build();
    for (int i = 1; i <= d.dim; ++i) {
      ConditionReport r = verify_equivalence(d, i);
      const std::string label = e.id + " i=" + std::to_string(i);
      rec.expect(r.verdict != Verdict::Violated, [&] { return label + ": equivalence violated"; });
      rec.expect(!r.c2 || r.c3, [&] { return label + ": C(i,2) without C(i,3)"; });
      rec.expect(!r.c4 || r.c5, [&] { return label + ": C(i,4) without C(i,5)"; });
      if (r.c1 == Tri::True) {
        rec.expect(r.c2 && r.c4, [&] { return label + ": K = -(n-i)L but C(i,2) or C(i,4) fails"; });
        if (r.applicable != Theorem::None && r.applicable != Theorem::PP0) {
          rec.expect(r.c2 && r.c3 && r.c4 && r.c5, [&] { return label + ": not all five conditions hold"; });
        }
      }
    }
    if (e.id.rfind("ex1-product", 0) == 0) {
      const int i = d.dim - 1;
      ConditionReport r = check_conditions(d, i);
      rec.expect(r.details.g_i == 1 && r.details.delta_i == 1 && r.c1 == Tri::False,
                 [&] { return e.id + ": expected g = Delta = 1 with C(i,1) false"; });
    }
  }
  return rec.take();
}

using SuiteFn = SuiteResult (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> all = {
      {"basis", suite_basis},         {"genus-routes", suite_genus_routes},
      {"delta-recursion", suite_delta_recursion}, {"segre", suite_segre},
      {"reduction", suite_reduction}, {"conjecture", suite_conjecture},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.push_back(s.first);
    out.push_back("all");
    return out;
  }();
  return names;
}

std::vector<SuiteResult> run_suite(const std::string& name, const VerifyOptions& options) {
  std::vector<SuiteResult> out;
  for (const auto& [n, fn] : suites()) {
    if (name == "all" || name == n) out.push_back(fn(options));
  }
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
  return out;
}

PolarizedVarietyData random_instance(std::mt19937_64& rng, int max_dim) {
  PolarizedVarietyData d;
  d.dim = uniform(rng, 1, max_dim);
  const int n = d.dim;
  d.name = "random";
  d.h_struct.assign(static_cast<std::size_t>(n) + 1, 0);
  d.h_line.assign(static_cast<std::size_t>(n) + 1, 0);
  d.h_struct[0] = 1;
  for (int j = 1; j <= n; ++j) {
    d.h_struct[static_cast<std::size_t>(j)] = uniform(rng, 0, 3);
    d.h_line[static_cast<std::size_t>(j)] = uniform(rng, 0, 4);
  }

  std::vector<Rational> chi(static_cast<std::size_t>(n) + 1);
  chi[0] = Rational(alternating_sum(d.h_struct));
  for (int j = 1; j < n; ++j) chi[static_cast<std::size_t>(j)] = uniform(rng, -6, 6);
  chi[static_cast<std::size_t>(n)] = uniform(rng, 1, 8);
  d.chi = from_binomial_basis(BinomialPolynomial(chi));

  // chi(1) = sum chi_j = h^0(L) - h^1(L) + ...
  Integer chi1 = 0;
  for (const auto& c : chi) chi1 += c.get_num();
  Integer higher = alternating_sum(d.h_line) - d.h_line[0];
  Integer h0 = chi1 - higher;
  if (h0 < 0) {
    d.h_line[1] += -h0;
    h0 = 0;
  }
  d.h_line[0] = h0;
  d.smooth = uniform(rng, 0, 3) != 0;
  d.bs_dim = uniform(rng, -1, n);
  return d;
}

}  // namespace sectional
