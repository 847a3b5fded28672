#include "sectional/polarized.hpp"

#include "sectional/errors.hpp"

#include <sstream>

namespace sectional {

std::optional<bool> CanonicalAssertion::equals_multiple(int r) const {
  switch (kind_) {
    case Kind::Unknown: return std::nullopt;
    case Kind::NotMultiple: return false;
    case Kind::Multiple: return r_ == r;
  }
  return std::nullopt;
}

Integer alternating_sum(const std::vector<Integer>& h) {
  Integer s = 0;
  for (std::size_t j = 0; j < h.size(); ++j) {
    if (j % 2 == 0) s += h[j]; else s -= h[j];
  }
  return s;
}

ValidationReport validate(const PolarizedVarietyData& d) {
  ValidationReport report;
  auto fail = [&](const std::string& msg) { report.violations.push_back(msg); };

  if (d.dim < 1) {
    fail("dimension must be positive, got " + std::to_string(d.dim));
    return report;
  }
  const auto width = static_cast<std::size_t>(d.dim) + 1;

  if (d.chi.degree() != d.dim) {
    fail("degree mismatch: chi has degree " + std::to_string(d.chi.degree()) + " but dim is " +
         std::to_string(d.dim));
  } else {
    Rational top = d.chi.leading_coefficient() * Rational(factorial(static_cast<unsigned>(d.dim)));
    if (!is_integer(top) || top <= 0) {
      fail("L^n = n! * leading coefficient is " + format_rational(top) +
           ", not a positive integer");
    }
  }

  bool tables_ok = true;
  auto check_table = [&](const std::vector<Integer>& h, const char* label) {
    if (h.size() != width) {
      fail(std::string(label) + " has " + std::to_string(h.size()) + " entries, expected " +
           std::to_string(width));
      tables_ok = false;
      return;
    }
    for (std::size_t j = 0; j < h.size(); ++j) {
      if (h[j] < 0) {
        fail(std::string(label) + "[" + std::to_string(j) + "] is negative");
        tables_ok = false;
      }
    }
  };
  check_table(d.h_struct, "h^j(O_X)");
  check_table(d.h_line, "h^j(L)");

  if (tables_ok) {
    if (d.h_struct[0] != 1) fail("h^0(O_X) must be 1, got " + d.h_struct[0].get_str());
    Rational chi0 = d.chi(0);
    if (chi0 != Rational(alternating_sum(d.h_struct))) {
      fail("chi(0) mismatch: chi(0) = " + format_rational(chi0) +
           " but sum (-1)^j h^j(O_X) = " + alternating_sum(d.h_struct).get_str());
    }
    Rational chi1 = d.chi(1);
    if (chi1 != Rational(alternating_sum(d.h_line))) {
      fail("chi(1) mismatch: chi(1) = " + format_rational(chi1) +
           " but sum (-1)^j h^j(L) = " + alternating_sum(d.h_line).get_str());
    }
  }

  if (d.adjoint_h0) {
    if (d.adjoint_h0->size() != static_cast<std::size_t>(d.dim)) {
      fail("adjoint table has " + std::to_string(d.adjoint_h0->size()) + " entries, expected " +
           std::to_string(d.dim));
    }
    for (const auto& v : *d.adjoint_h0) {
      if (v < 0) {
        fail("adjoint table has a negative entry");
        break;
      }
    }
  }

  if (d.bs_dim < -1 || d.bs_dim > d.dim) {
    fail("bs_dim " + std::to_string(d.bs_dim) + " outside [-1, " + std::to_string(d.dim) + "]");
  }
  return report;
}

void require_valid(const PolarizedVarietyData& d) {
  auto report = validate(d);
  if (report.ok()) return;
  std::ostringstream os;
  os << "instance '" << d.name << "' is invalid:";
  for (const auto& v : report.violations) os << "\n  " << v;
  throw Error(ErrorCode::InvalidInstance, os.str());
}

Integer degree_Ln(const PolarizedVarietyData& d) {
  if (d.dim < 1) throw Error(ErrorCode::InvalidInstance, "dimension must be positive");
  Rational top = d.chi.coefficient(d.dim) * Rational(factorial(static_cast<unsigned>(d.dim)));
  if (!is_integer(top) || top <= 0) {
    throw Error(ErrorCode::NonIntegral,
                "n! * leading coefficient = " + format_rational(top) + " is not a positive integer");
  }
  return top.get_num();
}

}  // namespace sectional
