#include "beepmis/experiment.hpp"

#include <gtest/gtest.h>

#include "beepmis/error.hpp"
#include "beepmis/probability.hpp"

namespace beepmis {
namespace {

TEST(GraphSourceTest, Grammar) {
  const auto er = parse_graph_source("er:100,0.5");
  EXPECT_EQ(er.family, Family::ErdosRenyi);
  EXPECT_EQ(er.first, 100u);
  EXPECT_EQ(er.p_edge, 0.5);
  EXPECT_EQ(param_string(er), "0.5");

  const auto grid = parse_graph_source("grid:3,4");
  EXPECT_EQ(build_graph(grid, 0).node_count(), 12u);
  EXPECT_EQ(param_string(grid), "3x4");

  EXPECT_EQ(build_graph(parse_graph_source("clique:5"), 0).edge_count(), 10u);
  EXPECT_EQ(build_graph(parse_graph_source("cliquefam:3"), 0).node_count(), 18u);
  EXPECT_EQ(build_graph(parse_graph_source("path:3"), 0).edge_count(), 2u);
  EXPECT_EQ(parse_graph_source("file:/tmp/x,y.el").path, "/tmp/x,y.el");

  for (const char* bad : {"er:100", "er:100,2", "er:x,0.5", "grid:3", "clique:0", "clique", "torus:3",
                          "path:3,4", "file:", "path:-1"}) {
    EXPECT_THROW(parse_graph_source(bad), InvalidParameter) << bad;
  }
}

TEST(GraphSourceTest, ErUsesSeed) {
  const auto src = parse_graph_source("er:40,0.5");
  EXPECT_EQ(build_graph(src, 1), build_graph(src, 1));
  EXPECT_NE(build_graph(src, 1), build_graph(src, 2));
}

TEST(GraphFamilyTest, GridSizesToCeilSqrt) {
  const auto fam = parse_graph_family("grid");
  for (auto [n, side] : std::vector<std::pair<std::size_t, std::size_t>>{
           {1, 1}, {2, 2}, {4, 2}, {5, 3}, {64, 8}, {128, 12}, {256, 16}, {512, 23}, {1024, 32}}) {
    const auto src = instantiate(fam, n);
    EXPECT_EQ(src.first, side) << n;
    EXPECT_EQ(src.second, side) << n;
  }
}

TEST(GraphFamilyTest, Grammar) {
  EXPECT_EQ(parse_graph_family("er:0.25").p_edge, 0.25);
  EXPECT_EQ(instantiate(parse_graph_family("cliquefam"), 4).first, 4u);
  for (const char* bad : {"er", "er:", "er:1.5", "grid:3", "blob", "file:"}) {
    EXPECT_THROW(parse_graph_family(bad), InvalidParameter) << bad;
  }
}

TEST(SeedTest, StableAndDistinct) {
  EXPECT_EQ(trial_seed(1, 64, 0), trial_seed(1, 64, 0));
  EXPECT_NE(trial_seed(1, 64, 0), trial_seed(1, 64, 1));
  EXPECT_NE(trial_seed(1, 64, 0), trial_seed(1, 128, 0));
  EXPECT_NE(trial_seed(1, 64, 0), trial_seed(2, 64, 0));
  EXPECT_NE(graph_seed(5), 5u);
  EXPECT_EQ(trial_seed(0, 0, 0), mix64(mix64(mix64(0))));
}

ExperimentSpec small_spec() {
  ExperimentSpec spec;
  spec.policies = {"feedback", "sweep"};
  spec.families = {"er:0.5", "grid"};
  spec.sizes = {9, 20};
  spec.trials = 5;
  spec.master_seed = 42;
  return spec;
}

TEST(RunExperimentTest, OrderingAndPairing) {
  const auto rs = run_experiment(small_spec());
  ASSERT_EQ(rs.size(), 2u * 2 * 2 * 5);
  // (family, policy, size, trial)
  EXPECT_EQ(rs[0].graph, "er");
  EXPECT_EQ(rs[0].policy, "feedback");
  EXPECT_EQ(rs[0].n, 9u);
  EXPECT_EQ(rs[4].trial, 4u);
  EXPECT_EQ(rs[5].n, 20u);
  EXPECT_EQ(rs[10].policy, "sweep");
  EXPECT_EQ(rs[20].graph, "grid");
  EXPECT_EQ(rs[20].n, 9u);
  EXPECT_EQ(rs[20].param, "3x3");
  EXPECT_EQ(rs[25].n, 25u);  // 5x5 grid for size 20
  // Paired seeds across policies.
  for (std::size_t i = 0; i < 10; ++i) EXPECT_EQ(rs[i].seed, rs[10 + i].seed);
  for (const auto& r : rs) {
    EXPECT_TRUE(r.terminated);
    EXPECT_GE(r.rounds, 1u);
    EXPECT_DOUBLE_EQ(r.beeps_per_node, static_cast<double>(r.total_beeps) / static_cast<double>(r.n));
  }
}

TEST(RunExperimentTest, JobsDoNotChangeResults) {
  auto spec = small_spec();
  const auto serial = run_experiment(spec);
  spec.jobs = 4;
  EXPECT_EQ(run_experiment(spec), serial);
  spec.jobs = 64;
  EXPECT_EQ(run_experiment(spec), serial);
}

TEST(RunExperimentTest, MaxRoundsOverride) {
  ExperimentSpec spec;
  spec.policies = {"const:1"};
  spec.families = {"clique"};
  spec.sizes = {3};
  spec.trials = 2;
  spec.max_rounds = 7;
  for (const auto& r : run_experiment(spec)) {
    EXPECT_FALSE(r.terminated);
    EXPECT_EQ(r.rounds, 7u);
    EXPECT_EQ(r.total_beeps, 21u);
  }
}

TEST(RunExperimentTest, InvalidSpecs) {
  auto spec = small_spec();
  spec.trials = 0;
  EXPECT_THROW(run_experiment(spec), InvalidParameter);
  spec = small_spec();
  spec.sizes = {0};
  EXPECT_THROW(run_experiment(spec), InvalidParameter);
  spec = small_spec();
  spec.policies = {"const:0"};
  EXPECT_THROW(run_experiment(spec), InvalidParameter);
  spec = small_spec();
  spec.families = {};
  EXPECT_THROW(run_experiment(spec), InvalidParameter);
  spec = small_spec();
  spec.max_rounds = 0;
  EXPECT_THROW(run_experiment(spec), InvalidParameter);
}

}  // namespace
}  // namespace beepmis
