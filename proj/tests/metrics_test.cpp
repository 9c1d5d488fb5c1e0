#include "beepmis/metrics.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "beepmis/error.hpp"
#include "beepmis/experiment.hpp"

namespace beepmis {
namespace {

TEST(SummarizeTest, Examples) {
  const std::vector<double> one{4};
  const auto s1 = summarize(one);
  EXPECT_EQ(s1.count, 1u);
  EXPECT_EQ(s1.mean, 4.0);
  EXPECT_EQ(s1.stddev, 0.0);

  const std::vector<double> two{2, 4};
  const auto s2 = summarize(two);
  EXPECT_EQ(s2.mean, 3.0);
  EXPECT_DOUBLE_EQ(s2.stddev, std::sqrt(2.0));
  EXPECT_EQ(s2.min, 2.0);
  EXPECT_EQ(s2.max, 4.0);
  EXPECT_TRUE(s2.sample_stddev);

  EXPECT_THROW(summarize(std::span<const double>{}), EmptySample);
  EXPECT_THROW(summarize(std::span<const TrialRecord>{}, Field::Rounds), EmptySample);
}

TEST(SummarizeTest, PermutationInvariantAndOrdered) {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<double> xs(1 + rng() % 50);
    for (double& x : xs) x = static_cast<double>(rng() % 100000) / 7.0;
    const auto a = summarize(xs);
    std::shuffle(xs.begin(), xs.end(), rng);
    const auto b = summarize(xs);
    ASSERT_EQ(a.mean, b.mean);
    ASSERT_EQ(a.stddev, b.stddev);
    ASSERT_LE(a.min, a.mean);
    ASSERT_LE(a.mean, a.max);
    ASSERT_GE(a.stddev, 0.0);
  }
}

TEST(SummarizeTest, RecordFields) {
  std::vector<TrialRecord> rs(2);
  rs[0].rounds = 3;
  rs[1].rounds = 5;
  rs[0].beeps_per_node = 1.0;
  rs[1].beeps_per_node = 2.0;
  EXPECT_EQ(summarize(rs, Field::Rounds).mean, 4.0);
  EXPECT_EQ(summarize(rs, Field::BeepsPerNode).mean, 1.5);
}

TEST(SummarizeTest, K2FeedbackRoundsNearTwo) {
  ExperimentSpec spec;
  spec.families = {"clique"};
  spec.sizes = {2};
  spec.trials = 100;
  spec.master_seed = 12;
  const auto records = run_experiment(spec);
  ASSERT_EQ(records.size(), 100u);
  EXPECT_NEAR(summarize(records, Field::Rounds).mean, 2.0, 0.3);
}

TEST(ReferenceCurvesTest, Examples) {
  const auto a = reference_curves(1024);
  EXPECT_DOUBLE_EQ(a.log2n, 10);
  EXPECT_DOUBLE_EQ(a.log2n_squared, 100);
  EXPECT_DOUBLE_EQ(a.scaled, 25);
  const auto b = reference_curves(2);
  EXPECT_DOUBLE_EQ(b.log2n, 1);
  EXPECT_DOUBLE_EQ(b.log2n_squared, 1);
  EXPECT_DOUBLE_EQ(b.scaled, 2.5);
  const auto c = reference_curves(64);
  EXPECT_DOUBLE_EQ(c.log2n, 6);
  EXPECT_DOUBLE_EQ(c.log2n_squared, 36);
  EXPECT_DOUBLE_EQ(c.scaled, 15);
  EXPECT_THROW(reference_curves(1), InvalidParameter);
}

TEST(CsvTest, HeaderAndRow) {
  EXPECT_EQ(csv_header(), "policy,graph,n,param,trial,seed,rounds,terminated,total_beeps,beeps_per_node,mis_size");
  TrialRecord r;
  r.policy = "feedback";
  r.graph = "er";
  r.n = 3;
  r.param = "0.5";
  r.trial = 2;
  r.seed = 18446744073709551615ULL;
  r.rounds = 4;
  r.terminated = true;
  r.total_beeps = 7;
  r.beeps_per_node = 7.0 / 3.0;
  r.mis_size = 1;
  EXPECT_EQ(to_csv_row(r), "feedback,er,3,0.5,2,18446744073709551615,4,true,7,2.33333,1");
  r.policy = "feedback:f=3,init=0.1,cap=0.4";
  r.terminated = false;
  EXPECT_EQ(to_csv_row(r), "\"feedback:f=3,init=0.1,cap=0.4\",er,3,0.5,2,18446744073709551615,4,false,7,2.33333,1");

  std::ostringstream os;
  write_csv(os, std::vector<TrialRecord>{r});
  EXPECT_EQ(os.str().substr(0, csv_header().size() + 1), std::string(csv_header()) + "\n");
}

TEST(CsvTest, FloatFormatting) {
  EXPECT_EQ(format_float(1.0), "1");
  EXPECT_EQ(format_float(1.1234567), "1.12346");
  EXPECT_EQ(format_float(0.5), "0.5");
}

TEST(GroupSummaryTest, NonTerminatedCountedSeparately) {
  std::vector<TrialRecord> rs(3);
  for (auto& r : rs) {
    r.policy = "sweep";
    r.graph = "cliquefam";
    r.param = "4";
    r.n = 40;
    r.terminated = true;
  }
  rs[0].rounds = 10;
  rs[1].rounds = 20;
  rs[2].rounds = 1000;
  rs[2].terminated = false;
  const auto groups = summarize_groups(rs);
  ASSERT_EQ(groups.size(), 1u);
  EXPECT_EQ(groups[0].trials, 3u);
  EXPECT_EQ(groups[0].non_terminated, 1u);
  ASSERT_TRUE(groups[0].rounds.has_value());
  EXPECT_EQ(groups[0].rounds->mean, 15.0);

  rs[0].terminated = rs[1].terminated = false;
  EXPECT_FALSE(summarize_groups(rs)[0].rounds.has_value());
}

}  // namespace
}  // namespace beepmis
