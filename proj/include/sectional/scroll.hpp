#pragma once

// Chern/Segre class calculus for classical scrolls P_Y(E) -> Y over a base of
// dimension m <= 3. The base is represented only by its intersection numbers.
//
// Conventions: H is the tautological class and pi_*(H^{r-1+j}) = s_j(E), where
// the Segre classes come from c_t(E^dual) s_t(E) = 1, so s_1 = c_1 and
// s_2 = c_1^2 - c_2.

#include "sectional/exact.hpp"
#include "sectional/polarized.hpp"

#include <compare>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sectional {

inline constexpr int kMaxBaseDim = 3;

/// c_1^{e1} c_2^{e2} c_3^{e3}; graded degree e1 + 2 e2 + 3 e3.
struct ClassMonomial {
  int e1 = 0;
  int e2 = 0;
  int e3 = 0;

  int degree() const { return e1 + 2 * e2 + 3 * e3; }
  friend auto operator<=>(const ClassMonomial&, const ClassMonomial&) = default;
};

/// Integer combination of Chern monomials, truncated at graded degree 3.
class ClassPolynomial {
 public:
  ClassPolynomial() = default;
  static ClassPolynomial one();
  /// c_j; c_0 = 1 and c_j = 0 for j > 3.
  static ClassPolynomial chern(int j);

  const std::map<ClassMonomial, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const ClassMonomial& m) const;
  /// Degree of a homogeneous polynomial; -1 for zero. Throws DegreeMismatch
  /// for mixed degrees.
  int homogeneous_degree() const;
  ClassPolynomial graded_part(int degree) const;

  ClassPolynomial& operator+=(const ClassPolynomial& other);
  ClassPolynomial& operator-=(const ClassPolynomial& other);
  ClassPolynomial& operator*=(const Integer& c);
  friend ClassPolynomial operator+(ClassPolynomial a, const ClassPolynomial& b) { return a += b; }
  friend ClassPolynomial operator-(ClassPolynomial a, const ClassPolynomial& b) { return a -= b; }
  friend ClassPolynomial operator*(ClassPolynomial a, const Integer& c) { return a *= c; }
  /// Product with terms above degree 3 discarded.
  friend ClassPolynomial operator*(const ClassPolynomial& a, const ClassPolynomial& b);

  friend bool operator==(const ClassPolynomial&, const ClassPolynomial&) = default;

  /// "c1^3 - 2*c1*c2 + c3"
  std::string to_string() const;

 private:
  void add_term(const ClassMonomial& m, const Integer& c);
  std::map<ClassMonomial, Integer> terms_;
};

/// Degree-j part of the formal inverse of 1 - c_1 + c_2 - c_3, for 0 <= j <= 3.
ClassPolynomial segre_polynomial(int j);

/// K_Y^k times a Chern monomial: a key of the intersection table.
struct TableMonomial {
  int k = 0;
  ClassMonomial chern;

  int degree() const { return k + chern.degree(); }
  friend auto operator<=>(const TableMonomial&, const TableMonomial&) = default;
};

/// Canonical spelling: factors K, c1, c2, c3 in that order, dot-separated,
/// powers caret-suffixed ("K.c1", "c1^2", "c1.c2", "K^2.c1").
std::string spell(const TableMonomial& m);
/// Inverse of spell. Only the canonical spelling is accepted.
TableMonomial parse_table_key(std::string_view key);
/// All table monomials of degree m, in canonical order.
std::vector<TableMonomial> table_monomials(int m);

struct ChernData {
  int base_dim = 0;                   // m
  int rank = 0;                       // r; the scroll has dimension m + r - 1
  std::vector<Integer> h_struct_base; // h^0(O_Y) .. h^m(O_Y)
  std::map<TableMonomial, Integer> table;

  int scroll_dim() const { return base_dim + rank - 1; }
  friend bool operator==(const ChernData&, const ChernData&) = default;
};

ValidationReport validate(const ChernData& cd);

/// Integral over Y of K_Y^{times_K} * p. Throws DegreeMismatch when
/// deg p + times_K != m and MissingTableEntry for absent monomials.
Integer evaluate_class(const ClassPolynomial& p, int times_K, const ChernData& cd);

/// L^n = s_m(E). Throws NonPositiveDegree when the table contradicts ampleness.
Integer scroll_degree(const ChernData& cd);

/// (K_M + (n-m)A) A^{n-1} = s_{m-1} s_1 - s_m + K_Y s_{m-1}.
Integer scroll_adjoint_degree(const ChernData& cd);

/// (K_X + (n-2)L) L^{n-1} = K_S c_1 + c_2 for a scroll over a surface.
Integer scroll_surface_mt2_degree(const ChernData& cd);

/// Split bundle O(a_1) + ... + O(a_r) on P^m (m = 1..3): Chern classes via the
/// Whitney product formula, K = -(m+1)h, h^m = 1.
ChernData split_bundle_on_projective_space(int m, std::span<const int> degrees);

/// P_C(E) over a smooth curve of genus g, E = O(a_1) + ... + O(a_r) with
/// a_i >= 1 and L the tautological bundle.
PolarizedVarietyData scroll_over_curve_data(int genus, std::span<const int> degrees);

}  // namespace sectional
