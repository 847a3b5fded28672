#include "sectional/exact.hpp"

#include "sectional/errors.hpp"

#include <cctype>

namespace sectional {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::InconsistentSamples: return "InconsistentSamples";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::DegreeExceeded: return "DegreeExceeded";
    case ErrorCode::NonIntegral: return "NonIntegral";
    case ErrorCode::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::MissingAdjointData: return "MissingAdjointData";
    case ErrorCode::NotSmooth: return "NotSmooth";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::MissingTableEntry: return "MissingTableEntry";
    case ErrorCode::NonPositiveDegree: return "NonPositiveDegree";
    case ErrorCode::WrongBaseDim: return "WrongBaseDim";
    case ErrorCode::EmptyDegrees: return "EmptyDegrees";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::InvalidInstance: return "InvalidInstance";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

Integer rising_factorial(const Integer& m, unsigned k) {
  Integer result = 1;
  for (unsigned j = 0; j < k; ++j) result *= m + j;
  return result;
}

Integer falling_factorial(const Integer& m, unsigned k) {
  Integer result = 1;
  for (unsigned j = 0; j < k; ++j) result *= m - j;
  return result;
}

Integer factorial(unsigned k) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), k);
  return result;
}

Integer binomial(const Integer& m, unsigned k) {
  Integer num = falling_factorial(m, k);
  Integer den = factorial(k);
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer to_integer(const Rational& q) {
  if (!is_integer(q)) {
    throw Error(ErrorCode::NonIntegral, format_rational(q) + " is not an integer");
  }
  return q.get_num();
}

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den)) {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  Integer d = parse_integer(den);
  if (d == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  Rational q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) {
    throw Error(ErrorCode::NonIntegral, z.get_str() + " does not fit in a machine integer");
  }
  return z.get_si();
}

}  // namespace sectional
