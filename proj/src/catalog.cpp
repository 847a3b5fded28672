#include "sectional/catalog.hpp"

#include "sectional/errors.hpp"
#include "sectional/scroll.hpp"

#include <algorithm>

namespace sectional {

namespace {

std::vector<Integer> delta_table(int n, const Integer& h0) {
  std::vector<Integer> h(static_cast<std::size_t>(n) + 1, 0);
  h[0] = h0;
  return h;
}

Integer pow_int(const Integer& base, int e) {
  Integer out = 1;
  for (int k = 0; k < e; ++k) out *= base;
  return out;
}

std::vector<Integer> kunneth(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> out(a.size() + b.size() - 1, 0);
  for (std::size_t p = 0; p < a.size(); ++p) {
    for (std::size_t q = 0; q < b.size(); ++q) out[p + q] += a[p] * b[q];
  }
  return out;
}

// h^0(K + kL) for k = 1..upto from the factor's adjoint table, extended past
// its dimension by Serre duality plus Kawamata-Viehweg: h^0(K + kL) =
// (-1)^n chi(-kL). Empty when the table is absent or disagrees with that
// formula.
std::optional<std::vector<Integer>> adjoint_series(const PolarizedVarietyData& d, int upto) {
  if (!d.smooth || !d.adjoint_h0) return std::nullopt;
  auto serre = [&](int k) {
    Rational v = d.chi(Rational(-k));
    if (d.dim % 2 == 1) v = -v;
    return v;
  };
  for (int k = 1; k <= d.dim; ++k) {
    if (serre(k) != Rational((*d.adjoint_h0)[static_cast<std::size_t>(k - 1)])) return std::nullopt;
  }
  std::vector<Integer> out;
  for (int k = 1; k <= upto; ++k) {
    if (k <= d.dim) {
      out.push_back((*d.adjoint_h0)[static_cast<std::size_t>(k - 1)]);
    } else {
      Rational v = serre(k);
      if (!is_integer(v) || v < 0) return std::nullopt;
      out.push_back(v.get_num());
    }
  }
  return out;
}

}  // namespace

PolarizedVarietyData projective_space(int n, int d) {
  if (n < 1 || d < 1) throw Error(ErrorCode::InvalidArgument, "projective_space needs n, d >= 1");
  PolarizedVarietyData out;
  out.name = "(P^" + std::to_string(n) + ", O(" + std::to_string(d) + "))";
  out.dim = n;
  out.chi = StdPolynomial::binomial_in(d, n, static_cast<unsigned>(n));
  out.h_struct = delta_table(n, 1);
  out.h_line = delta_table(n, binomial(d + n, static_cast<unsigned>(n)));
  // h^0(O(kd - n - 1)) = C(kd - 1, n)
  std::vector<Integer> adjoint;
  for (int k = 1; k <= n; ++k) adjoint.push_back(binomial(k * d - 1, static_cast<unsigned>(n)));
  out.adjoint_h0 = std::move(adjoint);
  out.smooth = true;
  out.bs_dim = -1;
  out.canonical = (n + 1) % d == 0 ? CanonicalAssertion::multiple_of(-(n + 1) / d)
                                   : CanonicalAssertion::not_a_multiple();
  return out;
}

PolarizedVarietyData quadric(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "quadric needs n >= 2");
  PolarizedVarietyData out;
  out.name = "(Q^" + std::to_string(n) + ", O(1))";
  out.dim = n;
  const auto top = static_cast<unsigned>(n + 1);
  out.chi = StdPolynomial::binomial_in(1, n + 1, top) - StdPolynomial::binomial_in(1, n - 1, top);
  out.h_struct = delta_table(n, 1);
  out.h_line = delta_table(n, n + 2);
  // K + kL = O_Q(k - n); h^0(O_Q(j)) = C(j+n+1, n+1) - C(j+n-1, n+1) for j >= 0
  std::vector<Integer> adjoint;
  for (int k = 1; k <= n; ++k) {
    const int j = k - n;
    adjoint.push_back(j < 0 ? Integer(0) : binomial(j + n + 1, top) - binomial(j + n - 1, top));
  }
  out.adjoint_h0 = std::move(adjoint);
  out.smooth = true;
  out.bs_dim = -1;
  out.canonical = CanonicalAssertion::multiple_of(-n);
  return out;
}

PolarizedVarietyData abelian(int n, std::optional<int> bs_dim) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "abelian needs n >= 1");
  PolarizedVarietyData out;
  out.name = "principally polarized abelian " + std::to_string(n) + "-fold";
  out.dim = n;
  out.chi = StdPolynomial::monomial(n);
  for (int j = 0; j <= n; ++j) out.h_struct.push_back(binomial(n, static_cast<unsigned>(j)));
  out.h_line = delta_table(n, 1);
  std::vector<Integer> adjoint;
  for (int k = 1; k <= n; ++k) adjoint.push_back(pow_int(k, n));
  out.adjoint_h0 = std::move(adjoint);
  out.smooth = true;
  out.bs_dim = bs_dim.value_or(n - 1);
  out.canonical = CanonicalAssertion::multiple_of(0);
  return out;
}

PolarizedVarietyData del_pezzo_surface(int d) {
  if (d < 1 || d > 9) throw Error(ErrorCode::InvalidArgument, "Del Pezzo degree must be 1..9");
  PolarizedVarietyData out;
  out.name = "Del Pezzo surface of degree " + std::to_string(d);
  out.dim = 2;
  // 1 + d t(t+1)/2
  out.chi = StdPolynomial({Rational(1), Rational(d, 2), Rational(d, 2)});
  out.h_struct = delta_table(2, 1);
  out.h_line = delta_table(2, d + 1);
  // K + kL = (k-1)L, and h^0(jL) = 1 + d j(j+1)/2 for j >= 0
  std::vector<Integer> adjoint;
  for (int k = 1; k <= 2; ++k) adjoint.push_back(1 + d * (k - 1) * k / 2);
  out.adjoint_h0 = std::move(adjoint);
  out.smooth = true;
  out.bs_dim = d == 1 ? 0 : -1;
  out.canonical = CanonicalAssertion::multiple_of(-1);
  return out;
}

PolarizedVarietyData product(const PolarizedVarietyData& y, const PolarizedVarietyData& f) {
  require_valid(y);
  require_valid(f);
  PolarizedVarietyData out;
  out.name = y.name + " x " + f.name;
  out.dim = y.dim + f.dim;
  out.chi = y.chi * f.chi;
  out.h_struct = kunneth(y.h_struct, f.h_struct);
  out.h_line = kunneth(y.h_line, f.h_line);
  out.smooth = y.smooth && f.smooth;

  // Bs|L| = Bs|H| x F  union  Y x Bs|A|
  int bs = -1;
  if (y.bs_dim >= 0) bs = std::max(bs, y.bs_dim + f.dim);
  if (f.bs_dim >= 0) bs = std::max(bs, y.dim + f.bs_dim);
  out.bs_dim = bs;

  // K_X = p1^*K_Y + p2^*K_F restricts to K_Y and K_F on the two kinds of fibre
  using Kind = CanonicalAssertion::Kind;
  const auto& ky = y.canonical;
  const auto& kf = f.canonical;
  if (ky.kind() == Kind::NotMultiple || kf.kind() == Kind::NotMultiple) {
    out.canonical = CanonicalAssertion::not_a_multiple();
  } else if (ky.multiple() && kf.multiple()) {
    out.canonical = *ky.multiple() == *kf.multiple() ? CanonicalAssertion::multiple_of(*ky.multiple())
                                                     : CanonicalAssertion::not_a_multiple();
  } else {
    out.canonical = CanonicalAssertion::unknown();
  }

  // H^0(K_X + kL) = H^0(K_Y + kH) (x) H^0(K_F + kA)
  auto ay = adjoint_series(y, out.dim);
  auto af = adjoint_series(f, out.dim);
  if (out.smooth && ay && af) {
    std::vector<Integer> adjoint;
    for (std::size_t k = 0; k < static_cast<std::size_t>(out.dim); ++k) adjoint.push_back((*ay)[k] * (*af)[k]);
    out.adjoint_h0 = std::move(adjoint);
  }
  require_valid(out);
  return out;
}

PolarizedVarietyData blow_up_point(const PolarizedVarietyData& d) {
  if (!d.smooth) throw Error(ErrorCode::NotSmooth, "cannot blow up '" + d.name + "': not smooth");
  if (d.dim < 2) throw Error(ErrorCode::DimensionTooSmall, "blow-up needs n >= 2");
  require_valid(d);
  const int n = d.dim;
  PolarizedVarietyData out = d;
  out.name = "Bl_p " + d.name;
  out.chi = d.chi - binomial_basis_element(static_cast<unsigned>(n));
  out.h_line[0] -= 1;

  // K' + kL' = pi^*(K + kL) + (n-1-k)E keeps its sections for k <= n-1;
  // for k = n the general point imposes one condition.
  if (out.adjoint_h0) {
    auto& top = out.adjoint_h0->back();
    if (top >= 1) {
      top -= 1;
    } else {
      out.adjoint_h0.reset();
    }
  }

  // K' = pi^*K + (n-1)E and L' = pi^*L - E
  if (auto r = d.canonical.multiple()) {
    out.canonical = *r == -(n - 1) ? CanonicalAssertion::multiple_of(-(n - 1))
                                   : CanonicalAssertion::not_a_multiple();
  }
  require_valid(out);
  return out;
}

PolarizedVarietyData scroll_over_curve(int genus, std::span<const int> degrees) {
  return scroll_over_curve_data(genus, degrees);
}

namespace {

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;
  auto add = [&](std::string id, std::string description, std::function<PolarizedVarietyData()> build) {
    entries.push_back({std::move(id), std::move(description), std::move(build)});
  };

  for (int n = 1; n <= 8; ++n) {
    add("p" + std::to_string(n) + "-o1", "(P^" + std::to_string(n) + ", O(1))",
        [n] { return projective_space(n, 1); });
  }
  const std::pair<int, int> spaces[] = {{2, 2}, {2, 3}, {3, 3}, {3, 4}, {4, 2}, {4, 5},
                                        {5, 2}, {5, 3}, {5, 6}, {6, 7}, {7, 2}, {7, 4}, {8, 3}};
  for (auto [n, d] : spaces) {
    add("p" + std::to_string(n) + "-o" + std::to_string(d),
        "(P^" + std::to_string(n) + ", O(" + std::to_string(d) + "))",
        [n, d] { return projective_space(n, d); });
  }
  add("pp0-delpezzo-p3-o2", "(P^3, O(2)): Del Pezzo 3-fold, K = -2L",
      [] { return projective_space(3, 2); });
  for (int n = 2; n <= 8; ++n) {
    add("quadric-" + std::to_string(n), "(Q^" + std::to_string(n) + ", O(1))",
        [n] { return quadric(n); });
  }
  for (int n = 1; n <= 5; ++n) {
    add("abelian-" + std::to_string(n), "principally polarized abelian " + std::to_string(n) + "-fold",
        [n] { return abelian(n); });
  }
  add("abelian-2x2", "product of two principally polarized abelian surfaces",
      [] { return product(abelian(2), abelian(2)); });
  for (int d = 1; d <= 9; ++d) {
    add("delpezzo-surface-" + std::to_string(d), "Del Pezzo surface of degree " + std::to_string(d),
        [d] { return del_pezzo_surface(d); });
  }
  add("ex1-product-n3", "elliptic curve x cubic surface (n = 3, m = 1)",
      [] { return product(abelian(1), del_pezzo_surface(3)); });
  add("ex1-product-n4", "abelian surface x cubic surface (n = 4, m = 2)",
      [] { return product(abelian(2), del_pezzo_surface(3)); });
  for (int m = 2; m <= 3; ++m) {
    for (int d = 1; d <= 9; ++d) {
      add("ex1-product-n" + std::to_string(m + 2) + "-d" + std::to_string(d),
          "abelian " + std::to_string(m) + "-fold x Del Pezzo surface of degree " + std::to_string(d),
          [m, d] { return product(abelian(m), del_pezzo_surface(d)); });
    }
  }
  add("ex2-blowup-p5-o2", "(P^5, O(2)) blown up at a general point",
      [] { return blow_up_point(projective_space(5, 2)); });
  add("ex2-blowup-p7-o2", "(P^7, O(2)) blown up at a general point",
      [] { return blow_up_point(projective_space(7, 2)); });
  add("segre-p1xp1", "(P^1 x P^1, O(1,1))",
      [] { return product(projective_space(1, 1), projective_space(1, 1)); });
  add("segre-p3xp3", "(P^3 x P^3, O(1,1)), K = -4L",
      [] { return product(projective_space(3, 1), projective_space(3, 1)); });
  add("segre-p4xp4", "(P^4 x P^4, O(1,1)), K = -5L",
      [] { return product(projective_space(4, 1), projective_space(4, 1)); });

  struct ScrollSpec { const char* id; int genus; std::vector<int> degrees; };
  const ScrollSpec scrolls[] = {
      {"scroll-rational-11", 0, {1, 1}},
      {"scroll-rational-123", 0, {1, 2, 3}},
      {"scroll-rational-1111", 0, {1, 1, 1, 1}},
      {"scroll-elliptic-111", 1, {1, 1, 1}},
      {"scroll-elliptic-2233", 1, {2, 2, 3, 3}},
      {"scroll-g2-456", 2, {4, 5, 6}},
  };
  for (const auto& s : scrolls) {
    std::string description = "scroll over a genus-" + std::to_string(s.genus) + " curve, E =";
    for (std::size_t k = 0; k < s.degrees.size(); ++k) {
      description += (k ? " + O(" : " O(") + std::to_string(s.degrees[k]) + ")";
    }
    add(s.id, description, [genus = s.genus, degrees = s.degrees] {
      return scroll_over_curve(genus, degrees);
    });
  }
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

std::vector<std::pair<std::string, std::string>> list_catalog() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : catalog()) out.emplace_back(e.id, e.description);
  return out;
}

PolarizedVarietyData catalog_instance(const std::string& id) {
  for (const auto& e : catalog()) {
    if (e.id == id) {
      auto d = e.build();
      return d;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown catalog id '" + id + "'");
}

}  // namespace sectional
