#pragma once

// Seeded property suites over random instances and the catalog.

#include "sectional/polarized.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace sectional {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct VerifyOptions {
  long trials = 1000;
  std::uint64_t seed = kDefaultSeed;
};

struct SuiteResult {
  std::string name;
  long checks = 0;
  long failures = 0;
  long skipped = 0;
  std::vector<std::string> messages;  // first few failures, then notes

  bool ok() const { return failures == 0; }
};

const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws Error(InvalidArgument)
/// for an unknown name.
std::vector<SuiteResult> run_suite(const std::string& name, const VerifyOptions& options);

/// Random valid instance with 1 <= n <= max_dim: random h^j(O_X), h^j(L) and
/// chi_1..chi_n, with chi_0 and h^0(L) solved for consistency.
PolarizedVarietyData random_instance(std::mt19937_64& rng, int max_dim = 8);

}  // namespace sectional
