#include "sectional/render.hpp"

#include "sectional/catalog.hpp"

#include <sstream>

namespace sectional {

namespace {

std::string canonical_text(const CanonicalAssertion& c) {
  switch (c.kind()) {
    case CanonicalAssertion::Kind::Multiple: return "K = " + std::to_string(*c.multiple()) + "L";
    case CanonicalAssertion::Kind::NotMultiple: return "K not a multiple of L";
    case CanonicalAssertion::Kind::Unknown: break;
  }
  return "unknown";
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string render_invariants(const PolarizedVarietyData& d, const InvariantTable& t) {
  std::ostringstream os;
  os << d.name << "\n";
  os << "  n = " << t.dim << ", L^n = " << t.degree << ", dim Bs|L| = " << d.bs_dim
     << ", " << canonical_text(d.canonical) << (d.smooth ? "" : ", not smooth") << "\n";
  os << "  chi(tL) = " << format_polynomial(d.chi) << "\n";
  os << "  j    chi_j    g_j    Delta_j\n";
  for (int j = 0; j <= t.dim; ++j) {
    const auto k = static_cast<std::size_t>(j);
    os << "  " << j;
    auto pad = [&](const std::string& s, std::size_t w) {
      os << std::string(s.size() < w ? w - s.size() : 1, ' ') << s;
    };
    pad(t.chi_coeffs[k].get_str(), 9);
    pad(t.g[k].get_str(), 7);
    pad(t.delta[k].get_str(), 11);
    os << "\n";
  }
  return os.str();
}

std::string render_report(const PolarizedVarietyData& d, const ConditionReport& r) {
  std::ostringstream os;
  const auto& det = r.details;
  os << d.name << "  (n = " << r.n << ", i = " << r.i << ")\n";
  os << "  C(i,1) K = " << -(r.n - r.i) << "L              " << to_string(r.c1) << "\n";
  os << "  C(i,2) Delta_i = 1, 2g_1-2 = (i-1)L^n  " << yes_no(r.c2) << "\n";
  os << "  C(i,3) Delta_i > 0, 2g_1-2 = (i-1)L^n  " << yes_no(r.c3) << "\n";
  os << "  C(i,4) g_i = 1, 2g_1-2 = (i-1)L^n      " << yes_no(r.c4) << "\n";
  os << "  C(i,5) g_i > 0, 2g_1-2 = (i-1)L^n      " << yes_no(r.c5) << "\n";
  os << "  Delta_i = " << det.delta_i << ", g_i = " << det.g_i << ", g_1 = " << det.g_1
     << ", 2g_1-2 = " << det.two_g1_minus_2 << ", (i-1)L^n = " << det.expected_two_g1 << "\n";
  if (r.minus_n_plus_1) {
    os << "  2g_1-2 = -2L^n: " << yes_no(r.minus_n_plus_1->first)
       << ", K = " << -(r.n + 1) << "L: " << to_string(r.minus_n_plus_1->second) << "\n";
  }
  if (r.minus_n) {
    os << "  2g_1-2 = -L^n: " << yes_no(r.minus_n->first)
       << ", K = " << -r.n << "L: " << to_string(r.minus_n->second) << "\n";
  }
  os << "  theorem: " << to_string(r.applicable) << " (" << hypothesis(r.applicable) << ")\n";
  os << "  equivalence: " << to_string(r.verdict) << "\n";
  for (const auto& a : r.audit) os << "  audit: " << a << "\n";
  return os.str();
}

Json to_json(const ConditionReport& r) {
  Json j;
  j["n"] = r.n;
  j["i"] = r.i;
  j["c1"] = std::string(to_string(r.c1));
  j["c2"] = r.c2;
  j["c3"] = r.c3;
  j["c4"] = r.c4;
  j["c5"] = r.c5;
  j["applicable"] = std::string(to_string(r.applicable));
  j["verdict"] = std::string(to_string(r.verdict));
  if (r.verdict != Verdict::NotAsserted) j["equivalenceOk"] = r.equivalence_ok;
  const auto& det = r.details;
  j["deltaI"] = det.delta_i.get_str();
  j["gI"] = det.g_i.get_str();
  j["g1"] = det.g_1.get_str();
  j["degree"] = det.degree.get_str();
  j["twoG1Minus2"] = det.two_g1_minus_2.get_str();
  j["expected"] = det.expected_two_g1.get_str();
  j["audit"] = r.audit;
  return j;
}

std::string render_segre_symbolic(int base_dim) {
  std::ostringstream os;
  for (int j = 1; j <= base_dim; ++j) os << "s_" << j << " = " << segre_polynomial(j).to_string() << "\n";
  return os.str();
}

std::string render_segre_numeric(const ChernData& cd) {
  std::ostringstream os;
  const int m = cd.base_dim;
  os << "base dim m = " << m << ", rank r = " << cd.rank << ", scroll dim n = " << cd.scroll_dim() << "\n";
  for (int j = 1; j <= m; ++j) {
    // s_j paired with c1^{m-j} so that every value is a number
    ClassPolynomial p = segre_polynomial(j);
    for (int k = j; k < m; ++k) p = p * ClassPolynomial::chern(1);
    os << "s_" << j;
    if (j < m) os << " . c1^" << (m - j);
    os << " = " << evaluate_class(p, 0, cd) << "\n";
  }
  os << "L^n = s_m = " << scroll_degree(cd) << "\n";
  os << "(K_M + (n-m)A) A^(n-1) = " << scroll_adjoint_degree(cd) << "\n";
  if (m == 2) os << "(K_X + (n-2)L) L^(n-1) = " << scroll_surface_mt2_degree(cd) << "\n";
  return os.str();
}

std::string render_catalog() {
  std::ostringstream os;
  for (const auto& e : catalog()) {
    PolarizedVarietyData d = e.build();
    os << e.id << "\t" << e.description << "\tn=" << d.dim << "\tL^n=" << degree_Ln(d) << "\n";
  }
  return os.str();
}

}  // namespace sectional
