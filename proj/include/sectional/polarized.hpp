#pragma once

#include "sectional/exact.hpp"
#include "sectional/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sectional {

/// What is known about K_X relative to L. The numerical data cannot decide
/// this, so it is asserted by the constructor or the input document.
class CanonicalAssertion {
 public:
  enum class Kind { Unknown, Multiple, NotMultiple };

  static CanonicalAssertion unknown() { return {}; }
  static CanonicalAssertion multiple_of(int r) { return CanonicalAssertion(Kind::Multiple, r); }
  static CanonicalAssertion not_a_multiple() { return CanonicalAssertion(Kind::NotMultiple, 0); }

  Kind kind() const { return kind_; }
  bool is_known() const { return kind_ != Kind::Unknown; }
  /// r with K_X = r L, when asserted.
  std::optional<int> multiple() const {
    return kind_ == Kind::Multiple ? std::optional<int>(r_) : std::nullopt;
  }
  /// Whether K_X = r L: nullopt when unknown.
  std::optional<bool> equals_multiple(int r) const;

  friend bool operator==(const CanonicalAssertion&, const CanonicalAssertion&) = default;

 private:
  CanonicalAssertion() = default;
  CanonicalAssertion(Kind kind, int r) : kind_(kind), r_(r) {}
  Kind kind_ = Kind::Unknown;
  int r_ = 0;
};

struct PolarizedVarietyData {
  std::string name;
  int dim = 0;
  StdPolynomial chi;                 // chi(tL)
  std::vector<Integer> h_struct;     // h^0(O_X) .. h^n(O_X)
  std::vector<Integer> h_line;       // h^0(L) .. h^n(L)
  // entry k-1 holds h^0(K_X + kL) for 1 <= k <= n
  std::optional<std::vector<Integer>> adjoint_h0;
  bool smooth = true;
  int bs_dim = -1;                   // dim Bs|L|, -1 when empty
  CanonicalAssertion canonical = CanonicalAssertion::unknown();

  friend bool operator==(const PolarizedVarietyData&, const PolarizedVarietyData&) = default;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const PolarizedVarietyData& d);

/// Throws Error(InvalidInstance) listing every violation.
void require_valid(const PolarizedVarietyData& d);

/// L^n = n! times the leading coefficient of chi.
Integer degree_Ln(const PolarizedVarietyData& d);

/// sum_j (-1)^j h^j over a cohomology table.
Integer alternating_sum(const std::vector<Integer>& h);

}  // namespace sectional
