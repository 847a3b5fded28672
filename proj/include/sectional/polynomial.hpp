#pragma once

// Univariate polynomials in t with exact rational coefficients, in the power
// basis and in the binomial basis B_j(t) = C(t+j-1, j).

#include "sectional/exact.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace sectional {

inline constexpr int kMaxDegree = 64;

class StdPolynomial {
 public:
  StdPolynomial() = default;
  /// coeffs[k] is the coefficient of t^k. Trailing zeros are dropped; more
  /// than kMaxDegree+1 significant coefficients throws DegreeExceeded.
  explicit StdPolynomial(std::vector<Rational> coeffs);

  static StdPolynomial constant(const Rational& c);
  static StdPolynomial monomial(int power, const Rational& c = 1);

  /// C(a*t + b, k) as a polynomial in t.
  static StdPolynomial binomial_in(const Integer& a, const Integer& b, unsigned k);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(int power) const;
  Rational leading_coefficient() const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  Rational operator()(const Rational& t) const;

  StdPolynomial& operator+=(const StdPolynomial& other);
  StdPolynomial& operator-=(const StdPolynomial& other);
  StdPolynomial& operator*=(const Rational& c);
  friend StdPolynomial operator+(StdPolynomial a, const StdPolynomial& b) { return a += b; }
  friend StdPolynomial operator-(StdPolynomial a, const StdPolynomial& b) { return a -= b; }
  friend StdPolynomial operator*(StdPolynomial a, const Rational& c) { return a *= c; }
  friend StdPolynomial operator*(const StdPolynomial& a, const StdPolynomial& b);

  friend bool operator==(const StdPolynomial&, const StdPolynomial&) = default;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// chi_coeffs[j] is the coefficient of C(t+j-1, j).
class BinomialPolynomial {
 public:
  BinomialPolynomial() = default;
  explicit BinomialPolynomial(std::vector<Rational> chi);

  int degree() const { return static_cast<int>(chi_.size()) - 1; }
  std::span<const Rational> chi_coeffs() const { return chi_; }
  Rational chi(int j) const;

  friend bool operator==(const BinomialPolynomial&, const BinomialPolynomial&) = default;

 private:
  std::vector<Rational> chi_;
};

/// C(t+j-1, j) in the power basis.
StdPolynomial binomial_basis_element(unsigned j);

/// Coefficients in the basis C(t+j-1, j). chi_k is the k-th backward
/// difference at t = 0, i.e. sum_l (-1)^l C(k,l) p(-l), read off a difference
/// table over the points 0, -1, ..., -deg p.
BinomialPolynomial to_binomial_basis(const StdPolynomial& p);

StdPolynomial from_binomial_basis(const BinomialPolynomial& b);

struct Sample {
  Integer t;
  Rational value;
};

/// Unique polynomial of degree <= degree through the samples. Extra samples
/// must lie on it.
StdPolynomial interpolate(std::span<const Sample> samples, int degree);

std::string format_polynomial(const StdPolynomial& p, char var = 't');

}  // namespace sectional
