#include "sectional/genus.hpp"

#include "sectional/errors.hpp"

#include <stdexcept>

namespace sectional {

namespace {

Integer sign(int power) { return power % 2 == 0 ? Integer(1) : Integer(-1); }

void check_index(const PolarizedVarietyData& d, int i, int max_i) {
  if (i < 0 || i > max_i) {
    throw Error(ErrorCode::IndexOutOfRange,
                "index " + std::to_string(i) + " outside [0, " + std::to_string(max_i) + "]");
  }
  if (static_cast<int>(d.h_struct.size()) != d.dim + 1) {
    throw Error(ErrorCode::InvalidInstance, "h^j(O_X) table does not match the dimension");
  }
}

const Integer& h_struct(const PolarizedVarietyData& d, int j) {
  return d.h_struct[static_cast<std::size_t>(j)];
}

// sum_{k=0}^{n-i} (-1)^{n-i-k} h^{n-k}(O_X), shared by all three routes.
Integer boundary_term(const PolarizedVarietyData& d, int i) {
  const int n = d.dim;
  Integer s = 0;
  for (int k = 0; k <= n - i; ++k) s += sign(n - i - k) * h_struct(d, n - k);
  return s;
}

}  // namespace

std::vector<Integer> chi_coefficients(const PolarizedVarietyData& d) {
  if (d.chi.degree() != d.dim) {
    throw Error(ErrorCode::InvalidInstance,
                "chi has degree " + std::to_string(d.chi.degree()) + ", expected " +
                    std::to_string(d.dim));
  }
  BinomialPolynomial b = to_binomial_basis(d.chi);
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(d.dim) + 1);
  for (int j = 0; j <= d.dim; ++j) {
    Rational c = b.chi(j);
    if (!is_integer(c)) {
      throw Error(ErrorCode::NonIntegralCoefficient,
                  "chi_" + std::to_string(j) + " = " + format_rational(c));
    }
    out.push_back(c.get_num());
  }
  return out;
}

Integer sectional_geometric_genus(const PolarizedVarietyData& d, int i) {
  check_index(d, i, d.dim);
  const int n = d.dim;
  auto chi = chi_coefficients(d);
  Integer chi_O = alternating_sum(d.h_struct);
  return sign(i) * (chi[static_cast<std::size_t>(n - i)] - chi_O) + boundary_term(d, i);
}

Integer genus_via_alternating_sum(const PolarizedVarietyData& d, int i) {
  check_index(d, i, d.dim - 1);
  const int n = d.dim;
  const auto span = static_cast<unsigned>(n - i);
  Rational s = 0;
  for (int j = 0; j <= n - i - 1; ++j) {
    Rational value = d.chi(Rational(-(n - i - j)));
    s += Rational(sign(n - j) * binomial(span, static_cast<unsigned>(j))) * value;
  }
  return to_integer(s) + boundary_term(d, i);
}

Integer genus_via_adjoint(const PolarizedVarietyData& d, int i) {
  if (!d.smooth) throw Error(ErrorCode::NotSmooth, "instance '" + d.name + "' is not smooth");
  check_index(d, i, d.dim - 1);
  const int n = d.dim;
  if (!d.adjoint_h0 || static_cast<int>(d.adjoint_h0->size()) < n - i) {
    throw Error(ErrorCode::MissingAdjointData,
                "h^0(K_X + kL) needed for 1 <= k <= " + std::to_string(n - i));
  }
  const auto span = static_cast<unsigned>(n - i);
  Integer s = 0;
  for (int j = 0; j <= n - i - 1; ++j) {
    const int k = n - i - j;
    s += sign(j) * binomial(span, static_cast<unsigned>(j)) *
         (*d.adjoint_h0)[static_cast<std::size_t>(k - 1)];
  }
  return s + boundary_term(d, i);
}

Integer delta_genus(const PolarizedVarietyData& d, int i) {
  check_index(d, i, d.dim);
  if (static_cast<int>(d.h_line.size()) != d.dim + 1) {
    throw Error(ErrorCode::InvalidInstance, "h^j(L) table does not match the dimension");
  }
  const int n = d.dim;
  Integer delta = 0;
  for (int k = 1; k <= i; ++k) {
    delta = sectional_geometric_genus(d, k - 1) - delta +
            (n - k + 1) * h_struct(d, k - 1) - d.h_line[static_cast<std::size_t>(k - 1)];
  }
  return delta;
}

InvariantTable invariant_table(const PolarizedVarietyData& d) {
  require_valid(d);
  const int n = d.dim;
  InvariantTable table;
  table.dim = n;
  table.degree = degree_Ln(d);
  table.chi_coeffs = chi_coefficients(d);

  Integer chi_O = alternating_sum(d.h_struct);
  for (int i = 0; i <= n; ++i) {
    table.g.push_back(sign(i) * (table.chi_coeffs[static_cast<std::size_t>(n - i)] - chi_O) +
                      boundary_term(d, i));
  }
  table.delta.push_back(0);
  for (int i = 1; i <= n; ++i) {
    const auto k = static_cast<std::size_t>(i - 1);
    table.delta.push_back(table.g[k] - table.delta[k] + (n - i + 1) * d.h_struct[k] -
                          d.h_line[k]);
  }

  const auto top = static_cast<std::size_t>(n);
  auto breach = [&](const std::string& what) {
    throw std::logic_error("invariant breach on '" + d.name + "': " + what);
  };
  if (table.g[0] != table.degree) breach("g_0 != L^n");
  if (table.chi_coeffs[top] != table.degree) breach("chi_n != L^n");
  if (table.g[top] != d.h_struct[top]) breach("g_n != h^n(O_X)");
  if (table.delta[top] != d.h_struct[top] - d.h_line[top]) breach("Delta_n != h^n(O) - h^n(L)");
  return table;
}

}  // namespace sectional
