#include "sectional/errors.hpp"
#include "sectional/genus.hpp"
#include "sectional/verify.hpp"

#include <gtest/gtest.h>

using namespace sectional;

TEST(RandomInstance, AlwaysValid) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    PolarizedVarietyData d = random_instance(rng);
    ASSERT_TRUE(validate(d).ok());
    EXPECT_GE(d.dim, 1);
    EXPECT_LE(d.dim, 8);
  }
}

TEST(RandomInstance, RoutesAgree) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 1000; ++trial) {
    PolarizedVarietyData d = random_instance(rng);
    for (int i = 0; i < d.dim; ++i) ASSERT_EQ(sectional_geometric_genus(d, i), genus_via_alternating_sum(d, i));
  }
}

TEST(Suites, AllPassWithPinnedSeeds) {
  for (std::uint64_t seed : {std::uint64_t{0}, std::uint64_t{7}, kDefaultSeed}) {
    VerifyOptions o;
    o.trials = 300;
    o.seed = seed;
    for (const auto& r : run_suite("all", o)) {
      EXPECT_TRUE(r.ok()) << r.name << " seed " << seed << ": " << (r.messages.empty() ? "" : r.messages.front());
      EXPECT_GT(r.checks, 0) << r.name;
    }
  }
}

TEST(Suites, Deterministic) {
  VerifyOptions o;
  o.trials = 50;
  auto a = run_suite("genus-routes", o);
  auto b = run_suite("genus-routes", o);
  EXPECT_EQ(a[0].checks, b[0].checks);
}

TEST(Suites, UnknownName) {
  EXPECT_THROW(run_suite("nope", VerifyOptions{}), Error);
}
