#include "beepmis/probability.hpp"

#include <gtest/gtest.h>

#include "beepmis/error.hpp"

namespace beepmis {
namespace {

double frequency(const BeepProbability& p, int draws, std::uint64_t seed) {
  Rng rng(seed);
  int hits = 0;
  for (int i = 0; i < draws; ++i) hits += p.sample(rng) ? 1 : 0;
  return static_cast<double>(hits) / draws;
}

TEST(BeepProbabilityTest, Values) {
  EXPECT_EQ(BeepProbability::dyadic(0).value(), 1.0);
  EXPECT_EQ(BeepProbability::dyadic(3).value(), 0.125);
  EXPECT_EQ(BeepProbability::dyadic(3).exponent(), 3u);
  EXPECT_EQ(BeepProbability::real(0.3).value(), 0.3);
  EXPECT_FALSE(BeepProbability::real(0.3).exponent().has_value());
  EXPECT_THROW(BeepProbability::real(0.0), InvalidParameter);
  EXPECT_THROW(BeepProbability::real(1.01), InvalidParameter);
}

TEST(BeepProbabilityTest, CertainEventsAlwaysFire) {
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    ASSERT_TRUE(BeepProbability::dyadic(0).sample(rng));
    ASSERT_TRUE(BeepProbability::real(1.0).sample(rng));
  }
}

TEST(BeepProbabilityTest, EmpiricalFrequencies) {
  // 1e5 draws: standard error <= 0.0016.
  EXPECT_NEAR(frequency(BeepProbability::dyadic(1), 100000, 1), 0.5, 0.01);
  EXPECT_NEAR(frequency(BeepProbability::dyadic(3), 100000, 2), 0.125, 0.01);
  EXPECT_NEAR(frequency(BeepProbability::real(0.3), 100000, 3), 0.3, 0.01);
  EXPECT_EQ(frequency(BeepProbability::dyadic(70), 10000, 4), 0.0);
}

TEST(BeepProbabilityTest, DyadicDrawConsumesOneWordBelow64) {
  Rng a(5), b(5);
  BeepProbability::dyadic(10).sample(a);
  b();
  EXPECT_EQ(a(), b());
}

TEST(Mix64Test, KnownSplitMixOutput) {
  // First output of the reference SplitMix64 generator seeded with 0.
  EXPECT_EQ(mix64(0), 0xe220a8397b1dcdafULL);
  EXPECT_NE(mix64(1), mix64(2));
}

}  // namespace
}  // namespace beepmis
