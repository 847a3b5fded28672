#include "sectional/scroll.hpp"

#include "sectional/errors.hpp"

#include <algorithm>
#include <sstream>

namespace sectional {

ClassPolynomial ClassPolynomial::one() {
  ClassPolynomial p;
  p.add_term({}, 1);
  return p;
}

ClassPolynomial ClassPolynomial::chern(int j) {
  switch (j) {
    case 0: return one();
    case 1: { ClassPolynomial p; p.add_term({1, 0, 0}, 1); return p; }
    case 2: { ClassPolynomial p; p.add_term({0, 1, 0}, 1); return p; }
    case 3: { ClassPolynomial p; p.add_term({0, 0, 1}, 1); return p; }
    default: return {};
  }
}

void ClassPolynomial::add_term(const ClassMonomial& m, const Integer& c) {
  if (c == 0 || m.degree() > kMaxBaseDim) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer ClassPolynomial::coefficient(const ClassMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

int ClassPolynomial::homogeneous_degree() const {
  int degree = -1;
  for (const auto& [m, c] : terms_) {
    if (degree == -1) {
      degree = m.degree();
    } else if (degree != m.degree()) {
      throw Error(ErrorCode::DegreeMismatch, "class polynomial " + to_string() + " is not homogeneous");
    }
  }
  return degree;
}

ClassPolynomial ClassPolynomial::graded_part(int degree) const {
  ClassPolynomial out;
  for (const auto& [m, c] : terms_) {
    if (m.degree() == degree) out.add_term(m, c);
  }
  return out;
}

ClassPolynomial& ClassPolynomial::operator+=(const ClassPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

ClassPolynomial& ClassPolynomial::operator-=(const ClassPolynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

ClassPolynomial& ClassPolynomial::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

ClassPolynomial operator*(const ClassPolynomial& a, const ClassPolynomial& b) {
  ClassPolynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term({ma.e1 + mb.e1, ma.e2 + mb.e2, ma.e3 + mb.e3}, ca * cb);
    }
  }
  return out;
}

std::string ClassPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  // highest degree first, then lexicographically larger c1 power first
  std::vector<std::pair<ClassMonomial, Integer>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    if (x.first.degree() != y.first.degree()) return x.first.degree() > y.first.degree();
    return x.first > y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : ordered) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    auto push = [&](const char* sym, int e) {
      if (e == 0) return;
      factors.push_back(e == 1 ? std::string(sym) : std::string(sym) + "^" + std::to_string(e));
    };
    push("c1", m.e1);
    push("c2", m.e2);
    push("c3", m.e3);
    if (factors.empty()) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
  }
  return os.str();
}

ClassPolynomial segre_polynomial(int j) {
  if (j < 0 || j > kMaxBaseDim) {
    throw Error(ErrorCode::IndexOutOfRange, "Segre class index " + std::to_string(j));
  }
  // sum_{k=0}^{j} (-1)^k c_k s_{j-k} = 0 for j >= 1
  std::vector<ClassPolynomial> s{ClassPolynomial::one()};
  for (int deg = 1; deg <= j; ++deg) {
    ClassPolynomial next;
    for (int k = 1; k <= deg; ++k) {
      ClassPolynomial term = ClassPolynomial::chern(k) * s[static_cast<std::size_t>(deg - k)];
      if (k % 2 == 1) next += term; else next -= term;
    }
    s.push_back(next);
  }
  return s.back();
}

std::string spell(const TableMonomial& m) {
  std::vector<std::string> factors;
  auto push = [&](const char* sym, int e) {
    if (e == 0) return;
    factors.push_back(e == 1 ? std::string(sym) : std::string(sym) + "^" + std::to_string(e));
  };
  push("K", m.k);
  push("c1", m.chern.e1);
  push("c2", m.chern.e2);
  push("c3", m.chern.e3);
  if (factors.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "." : "") + factors[i];
  return out;
}

std::vector<TableMonomial> table_monomials(int m) {
  std::vector<TableMonomial> out;
  for (int k = m; k >= 0; --k) {
    for (int e1 = m - k; e1 >= 0; --e1) {
      for (int e2 = (m - k - e1) / 2; e2 >= 0; --e2) {
        int rest = m - k - e1 - 2 * e2;
        if (rest % 3 != 0) continue;
        out.push_back({k, {e1, e2, rest / 3}});
      }
    }
  }
  return out;
}

TableMonomial parse_table_key(std::string_view key) {
  for (int deg = 0; deg <= kMaxBaseDim; ++deg) {
    for (const auto& candidate : table_monomials(deg)) {
      if (spell(candidate) == key) return candidate;
    }
  }
  throw Error(ErrorCode::ParseError, "unrecognized table key '" + std::string(key) + "'");
}

ValidationReport validate(const ChernData& cd) {
  ValidationReport report;
  auto fail = [&](const std::string& msg) { report.violations.push_back(msg); };
  if (cd.base_dim < 1 || cd.base_dim > kMaxBaseDim) {
    fail("base dimension " + std::to_string(cd.base_dim) + " outside 1..3");
    return report;
  }
  if (cd.rank < 2) fail("rank must be at least 2, got " + std::to_string(cd.rank));
  if (cd.h_struct_base.size() != static_cast<std::size_t>(cd.base_dim) + 1) {
    fail("h^j(O_Y) has " + std::to_string(cd.h_struct_base.size()) + " entries, expected " +
         std::to_string(cd.base_dim + 1));
  } else if (cd.h_struct_base[0] != 1) {
    fail("h^0(O_Y) must be 1");
  }
  auto expected = table_monomials(cd.base_dim);
  for (const auto& m : expected) {
    auto it = cd.table.find(m);
    if (it == cd.table.end()) {
      fail("missing table entry " + spell(m));
      continue;
    }
    bool vanishes = (m.chern.e2 > 0 && cd.rank < 2) || (m.chern.e3 > 0 && cd.rank < 3);
    if (vanishes && it->second != 0) {
      fail("table entry " + spell(m) + " must vanish for rank " + std::to_string(cd.rank));
    }
  }
  for (const auto& [m, v] : cd.table) {
    if (m.degree() != cd.base_dim) fail("table entry " + spell(m) + " has the wrong degree");
  }
  return report;
}

Integer evaluate_class(const ClassPolynomial& p, int times_K, const ChernData& cd) {
  if (times_K < 0 || times_K > 1) {
    throw Error(ErrorCode::InvalidArgument, "times_K must be 0 or 1");
  }
  int degree = p.homogeneous_degree();
  if (degree != -1 && degree + times_K != cd.base_dim) {
    throw Error(ErrorCode::DegreeMismatch, "class of degree " + std::to_string(degree) +
                                               " times K^" + std::to_string(times_K) +
                                               " on a base of dimension " +
                                               std::to_string(cd.base_dim));
  }
  Integer total = 0;
  for (const auto& [m, c] : p.terms()) {
    TableMonomial key{times_K, m};
    auto it = cd.table.find(key);
    if (it == cd.table.end()) {
      throw Error(ErrorCode::MissingTableEntry, "no table entry for " + spell(key));
    }
    total += c * it->second;
  }
  return total;
}

Integer scroll_degree(const ChernData& cd) {
  Integer deg = evaluate_class(segre_polynomial(cd.base_dim), 0, cd);
  if (deg <= 0) {
    throw Error(ErrorCode::NonPositiveDegree,
                "s_m(E) = " + deg.get_str() + " is not positive, so E cannot be ample");
  }
  return deg;
}

Integer scroll_adjoint_degree(const ChernData& cd) {
  const int m = cd.base_dim;
  ClassPolynomial s_prev = segre_polynomial(m - 1);
  ClassPolynomial main = s_prev * segre_polynomial(1) - segre_polynomial(m);
  return evaluate_class(main, 0, cd) + evaluate_class(s_prev, 1, cd);
}

Integer scroll_surface_mt2_degree(const ChernData& cd) {
  if (cd.base_dim != 2) {
    throw Error(ErrorCode::WrongBaseDim,
                "needs a surface base, got dimension " + std::to_string(cd.base_dim));
  }
  return evaluate_class(ClassPolynomial::chern(1), 1, cd) +
         evaluate_class(ClassPolynomial::chern(2), 0, cd);
}

ChernData split_bundle_on_projective_space(int m, std::span<const int> degrees) {
  if (m < 1 || m > kMaxBaseDim) {
    throw Error(ErrorCode::InvalidArgument, "base dimension " + std::to_string(m));
  }
  if (degrees.empty()) throw Error(ErrorCode::EmptyDegrees, "split bundle needs a summand");
  // prod (1 + a_i h), truncated at h^3
  std::vector<Integer> c(kMaxBaseDim + 1, 0);
  c[0] = 1;
  for (int a : degrees) {
    for (int k = kMaxBaseDim; k >= 1; --k) c[static_cast<std::size_t>(k)] += a * c[static_cast<std::size_t>(k - 1)];
  }
  ChernData cd;
  cd.base_dim = m;
  cd.rank = static_cast<int>(degrees.size());
  cd.h_struct_base.assign(static_cast<std::size_t>(m) + 1, 0);
  cd.h_struct_base[0] = 1;
  for (const auto& mono : table_monomials(m)) {
    Integer v = 1;
    for (int i = 0; i < mono.k; ++i) v *= -(m + 1);
    for (int i = 0; i < mono.chern.e1; ++i) v *= c[1];
    for (int i = 0; i < mono.chern.e2; ++i) v *= c[2];
    for (int i = 0; i < mono.chern.e3; ++i) v *= c[3];
    cd.table[mono] = v;
  }
  return cd;
}

PolarizedVarietyData scroll_over_curve_data(int genus, std::span<const int> degrees) {
  if (degrees.empty()) throw Error(ErrorCode::EmptyDegrees, "scroll needs at least one summand");
  if (genus < 0) throw Error(ErrorCode::InvalidArgument, "negative genus");
  long d = 0;
  for (int a : degrees) {
    if (a < 1) throw Error(ErrorCode::InvalidArgument, "summand degree must be >= 1 for ampleness");
    d += a;
  }
  const int r = static_cast<int>(degrees.size());
  const int n = r;
  const Integer g = genus;

  PolarizedVarietyData out;
  std::ostringstream name;
  name << "P(E) over a genus-" << genus << " curve, E =";
  for (std::size_t i = 0; i < degrees.size(); ++i) name << (i ? " + " : " ") << "O(" << degrees[i] << ")";
  out.name = name.str();
  out.dim = n;

  // chi(tH) = d C(t+r-1, r) + (1-g) C(t+r-1, r-1)
  out.chi = StdPolynomial::binomial_in(1, r - 1, static_cast<unsigned>(r)) * Rational(d) +
            StdPolynomial::binomial_in(1, r - 1, static_cast<unsigned>(r - 1)) * Rational(1 - g);

  out.h_struct.assign(static_cast<std::size_t>(n) + 1, 0);
  out.h_struct[0] = 1;
  out.h_struct[1] = g;

  // h^j(L) = h^j(C, E); summands of low degree are taken general in Pic^a(C)
  out.h_line.assign(static_cast<std::size_t>(n) + 1, 0);
  bool globally_generated = true;
  for (int a : degrees) {
    Integer euler = a + 1 - g;
    Integer h0 = euler > 0 ? euler : Integer(0);
    out.h_line[0] += h0;
    out.h_line[1] += h0 - euler;
    if (a < 2 * genus) globally_generated = false;
  }
  out.smooth = true;
  out.bs_dim = globally_generated ? -1 : n;

  // h^0(K + kH) = h^0(C, S^{k-r}E (x) K_C (x) det E), nonspecial since every
  // summand has degree >= 2g - 1.
  std::vector<Integer> adjoint;
  for (int k = 1; k <= n; ++k) {
    if (k < r) {
      adjoint.push_back(0);
      continue;
    }
    const Integer top = k - 1;
    adjoint.push_back(d * binomial(top, static_cast<unsigned>(r)) +
                      (d + g - 1) * binomial(top, static_cast<unsigned>(r - 1)));
  }
  out.adjoint_h0 = std::move(adjoint);

  if (r >= 2) {
    // K = -rH + pi^*(K_C + det E) is a multiple of H only when K_C + det E = 0
    out.canonical = (genus == 0 && d == 2) ? CanonicalAssertion::multiple_of(-r)
                                           : CanonicalAssertion::not_a_multiple();
  } else {
    const long a = degrees[0];
    const long kdeg = 2L * genus - 2;
    if (genus == 1) {
      out.canonical = CanonicalAssertion::multiple_of(0);
    } else if (genus == 0) {
      out.canonical = kdeg % a == 0 ? CanonicalAssertion::multiple_of(static_cast<int>(kdeg / a))
                                    : CanonicalAssertion::not_a_multiple();
    } else {
      out.canonical = kdeg % a == 0 ? CanonicalAssertion::unknown()
                                    : CanonicalAssertion::not_a_multiple();
    }
  }
  return out;
}

}  // namespace sectional
