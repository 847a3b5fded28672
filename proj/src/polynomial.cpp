#include "sectional/polynomial.hpp"

#include "sectional/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sectional {

StdPolynomial::StdPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

void StdPolynomial::normalize() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (degree() > kMaxDegree) {
    throw Error(ErrorCode::DegreeExceeded,
                "degree " + std::to_string(degree()) + " exceeds " + std::to_string(kMaxDegree));
  }
}

StdPolynomial StdPolynomial::constant(const Rational& c) { return StdPolynomial({c}); }

StdPolynomial StdPolynomial::monomial(int power, const Rational& c) {
  if (power < 0 || power > kMaxDegree) {
    throw Error(ErrorCode::DegreeExceeded, "monomial power " + std::to_string(power));
  }
  std::vector<Rational> coeffs(static_cast<std::size_t>(power) + 1);
  coeffs.back() = c;
  return StdPolynomial(std::move(coeffs));
}

StdPolynomial StdPolynomial::binomial_in(const Integer& a, const Integer& b, unsigned k) {
  StdPolynomial result = constant(1);
  for (unsigned j = 0; j < k; ++j) {
    result = result * StdPolynomial({Rational(b - j), Rational(a)});
  }
  return result * Rational(1, factorial(k));
}

Rational StdPolynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

Rational StdPolynomial::leading_coefficient() const {
  return is_zero() ? Rational(0) : coeffs_.back();
}

Rational StdPolynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

StdPolynomial& StdPolynomial::operator+=(const StdPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  normalize();
  return *this;
}

StdPolynomial& StdPolynomial::operator-=(const StdPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  normalize();
  return *this;
}

StdPolynomial& StdPolynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

StdPolynomial operator*(const StdPolynomial& a, const StdPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.degree() + b.degree() > kMaxDegree) {
    throw Error(ErrorCode::DegreeExceeded,
                "product degree " + std::to_string(a.degree() + b.degree()) + " exceeds " +
                    std::to_string(kMaxDegree));
  }
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return StdPolynomial(std::move(out));
}

BinomialPolynomial::BinomialPolynomial(std::vector<Rational> chi) : chi_(std::move(chi)) {
  for (auto& c : chi_) c.canonicalize();
  while (!chi_.empty() && chi_.back() == 0) chi_.pop_back();
  if (degree() > kMaxDegree) {
    throw Error(ErrorCode::DegreeExceeded, "binomial-basis degree " + std::to_string(degree()));
  }
}

Rational BinomialPolynomial::chi(int j) const {
  if (j < 0 || j > degree()) return 0;
  return chi_[static_cast<std::size_t>(j)];
}

StdPolynomial binomial_basis_element(unsigned j) {
  // C(t+j-1, j)
  return StdPolynomial::binomial_in(1, Integer(static_cast<long>(j)) - 1, j);
}

BinomialPolynomial to_binomial_basis(const StdPolynomial& p) {
  if (p.is_zero()) return {};
  const int n = p.degree();
  // row[l] = p(-l); after k passes of row[l] -= row[l+1], row[0] holds the
  // k-th backward difference at 0.
  std::vector<Rational> row(static_cast<std::size_t>(n) + 1);
  for (int l = 0; l <= n; ++l) row[static_cast<std::size_t>(l)] = p(Rational(-l));
  std::vector<Rational> chi;
  chi.reserve(row.size());
  for (int k = 0; k <= n; ++k) {
    chi.push_back(row[0]);
    for (int l = 0; l + 1 <= n - k; ++l) {
      row[static_cast<std::size_t>(l)] -= row[static_cast<std::size_t>(l) + 1];
    }
  }
  return BinomialPolynomial(std::move(chi));
}

StdPolynomial from_binomial_basis(const BinomialPolynomial& b) {
  StdPolynomial result;
  for (int j = 0; j <= b.degree(); ++j) {
    if (b.chi(j) == 0) continue;
    result += binomial_basis_element(static_cast<unsigned>(j)) * b.chi(j);
  }
  return result;
}

StdPolynomial interpolate(std::span<const Sample> samples, int degree) {
  if (degree < 0 || degree > kMaxDegree) {
    throw Error(ErrorCode::DegreeExceeded, "requested degree " + std::to_string(degree));
  }
  std::set<Integer> seen;
  for (const auto& s : samples) {
    if (!seen.insert(s.t).second) {
      throw Error(ErrorCode::DuplicatePoint, "sample point t=" + s.t.get_str() + " repeated");
    }
  }
  const auto needed = static_cast<std::size_t>(degree) + 1;
  if (samples.size() < needed) {
    throw Error(ErrorCode::InsufficientSamples,
                std::to_string(samples.size()) + " samples for degree " + std::to_string(degree));
  }

  // Newton divided differences on the first degree+1 samples.
  std::vector<Rational> xs(needed), dd(needed);
  for (std::size_t k = 0; k < needed; ++k) {
    xs[k] = samples[k].t;
    dd[k] = samples[k].value;
  }
  for (std::size_t level = 1; level < needed; ++level) {
    for (std::size_t k = needed - 1; k >= level; --k) {
      dd[k] = (dd[k] - dd[k - 1]) / (xs[k] - xs[k - level]);
    }
  }
  StdPolynomial result;
  StdPolynomial basis = StdPolynomial::constant(1);
  for (std::size_t k = 0; k < needed; ++k) {
    result += basis * dd[k];
    basis = basis * StdPolynomial({-xs[k], Rational(1)});
  }

  for (std::size_t k = needed; k < samples.size(); ++k) {
    if (result(Rational(samples[k].t)) != samples[k].value) {
      throw Error(ErrorCode::InconsistentSamples,
                  "sample at t=" + samples[k].t.get_str() + " is off the degree-" +
                      std::to_string(degree) + " interpolant");
    }
  }
  return result;
}

std::string format_polynomial(const StdPolynomial& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coefficient(k);
    if (c == 0) continue;
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (!unit || k == 0) os << format_rational(mag);
    if (k >= 1) {
      if (!unit) os << "*";
      os << var;
      if (k >= 2) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace sectional
