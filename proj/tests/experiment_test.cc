// Copyright 2026 The privpc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "privpc/experiment.h"

#include <cmath>
#include <map>
#include <sstream>
#include <string>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "privpc/errors.h"
#include "privpc/generators.h"

namespace privpc {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;
using ::testing::Not;
using ::testing::StartsWith;

ExperimentSpec Spec(Mechanism m, std::vector<int> ks, int trials) {
  ExperimentSpec spec;
  spec.graph_name = "g";
  spec.mechanism = m;
  spec.k_grid = std::move(ks);
  spec.trials = trials;
  spec.seed = 11;
  spec.delta = 0.01;
  spec.p = 0.5;
  return spec;
}

std::string Csv(const RunReport& r) {
  std::ostringstream out;
  WriteRowsCsv(r, out);
  return out.str();
}

TEST(ParseTest, KGrid) {
  EXPECT_THAT(ParseKGrid("10,20,5"), ElementsAre(10, 20, 5));
  EXPECT_THAT(ParseKGrid("10:40:10"), ElementsAre(10, 20, 30, 40));
  EXPECT_THROW(ParseKGrid("10:40"), ConfigError);
  EXPECT_THROW(ParseKGrid("a"), ConfigError);
  EXPECT_THROW(ParseKGrid("5:1:1"), ConfigError);
  EXPECT_THROW(ParseKGrid("1:5:0"), ConfigError);
}

TEST(ParseTest, Mechanism) {
  EXPECT_EQ(ParseMechanism("gauss_global"), Mechanism::kGaussGlobal);
  EXPECT_EQ(MechanismName(ParseMechanism("ppm")), "ppm");
  EXPECT_THROW(ParseMechanism("exp"), ConfigError);
}

TEST(ParseTest, Synthetic) {
  EXPECT_EQ(MakeSynthetic("complete:n=7").num_edges(), 21);
  EXPECT_EQ(MakeSynthetic("star:leaves=9").num_vertices(), 10);
  EXPECT_TRUE(MakeSynthetic("planted_clique:n=220,p=0.05,k=20,seed=3") ==
              PlantClique(220, 0.05, 20, 3).graph);
  EXPECT_TRUE(MakeSynthetic("regular:n=50,d=4") == RandomRegular(50, 4, 1));
  EXPECT_TRUE(MakeSynthetic("er:n=100,avg_deg=9.9,seed=2") ==
              ErdosRenyi(100, 0.1, 2));
  EXPECT_THROW(MakeSynthetic("complete:n=7,q=1"), ConfigError);
  EXPECT_THROW(MakeSynthetic("cycle:n=7"), ConfigError);
  EXPECT_THROW(MakeSynthetic("complete"), ConfigError);
}

TEST(ResolveConfigTest, AutoValues) {
  const Graph g = CompleteGraph(100);
  const SpectralSummary s = ComputeSummary(g, 0);
  ExperimentSpec spec = Spec(Mechanism::kPpm, {10}, 1);
  spec.delta.reset();
  spec.p.reset();
  const ResolvedConfig c = ResolveConfig(spec, g, s);
  EXPECT_NEAR(c.delta, std::log(4950.0) / 4950, 1e-15);
  EXPECT_NEAR(SuccessProbabilityLowerBound(c.delta, c.ptr.p), 0.95, 1e-12);
  EXPECT_EQ(c.ppm.iterations, 5);
  EXPECT_EQ(c.eps_total, 3.0);

  spec.mechanism = Mechanism::kPtr;
  const ResolvedConfig p = ResolveConfig(spec, g, s);
  EXPECT_EQ(p.eps_total, 7.0);
  EXPECT_EQ(p.delta_total, TblDelta0(p.ptr.mu, 1.0) + p.delta);
}

TEST(RunExperimentTest, CompleteGraphPtr) {
  const Graph g = CompleteGraph(100);
  const SpectralSummary s = ComputeSummary(g, 0);
  const RunReport r = RunExperiment(g, s, Spec(Mechanism::kPtr, {10, 20}, 100));
  ASSERT_EQ(r.rows.size(), 200u);
  EXPECT_EQ(r.rows.front().k, 10);
  EXPECT_EQ(r.rows.back().k, 20);
  for (const KAggregate& a : r.aggregates) {
    EXPECT_EQ(a.density_mean, 1.0);
    EXPECT_LE(a.no_response + a.infeasible, 5);
    EXPECT_EQ(a.released + a.no_response + a.infeasible, 100);
  }
}

TEST(RunExperimentTest, NonPrivateHasUnitJaccard) {
  const Graph g = PlantClique(120, 0.05, 12, 2).graph;
  const SpectralSummary s = ComputeSummary(g, 0);
  const RunReport r =
      RunExperiment(g, s, Spec(Mechanism::kNonPrivate, {5, 12, 30}, 3));
  for (const TrialRow& row : r.rows) EXPECT_EQ(*row.jaccard, 1.0);
  EXPECT_TRUE(std::isinf(r.config.eps_total));
}

TEST(RunExperimentTest, CsvIsReproducibleAcrossRunsAndThreads) {
  const Graph g = ErdosRenyi(300, 0.05, 5);
  const SpectralSummary s = ComputeSummary(g, 0);
  for (Mechanism m : {Mechanism::kPtr, Mechanism::kPpm, Mechanism::kGaussGlobal}) {
    ExperimentSpec spec = Spec(m, {5, 10}, 12);
    spec.mu = 1.0;
    const std::string a = Csv(RunExperiment(g, s, spec));
    spec.threads = 4;
    const std::string b = Csv(RunExperiment(g, s, spec));
    EXPECT_EQ(a, b);
    EXPECT_THAT(a, StartsWith("graph,mechanism,k,trial,status,density,jaccard,"
                              "time_ms,eps_total,delta_total,"));
  }
}

TEST(RunExperimentTest, AggregatesMatchRecomputation) {
  const Graph g = ErdosRenyi(300, 0.05, 6);
  const SpectralSummary s = ComputeSummary(g, 0);
  ExperimentSpec spec = Spec(Mechanism::kGaussGlobal, {5, 25}, 30);
  const RunReport r = RunExperiment(g, s, spec);
  std::map<int, std::vector<double>> by_k;
  for (const TrialRow& row : r.rows) by_k[row.k].push_back(*row.density);
  for (const KAggregate& a : r.aggregates) {
    const auto& xs = by_k[a.k];
    double mean = 0;
    for (double x : xs) mean += x / xs.size();
    double ss = 0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    EXPECT_NEAR(a.density_mean, mean, 1e-12);
    EXPECT_NEAR(a.density_std, std::sqrt(ss / (xs.size() - 1)), 1e-12);
    EXPECT_EQ(a.released, 30);
  }
}

TEST(RunExperimentTest, RejectsBadGrid) {
  const Graph g = CompleteGraph(10);
  const SpectralSummary s = ComputeSummary(g, 0);
  EXPECT_THROW(RunExperiment(g, s, Spec(Mechanism::kPtr, {11}, 1)), ConfigError);
  EXPECT_THROW(RunExperiment(g, s, Spec(Mechanism::kPtr, {}, 1)), ConfigError);
  EXPECT_THROW(RunExperiment(g, s, Spec(Mechanism::kPtr, {3}, 0)), ConfigError);
}

TEST(SuccessRateTest, StarAndMonotoneInP) {
  const Graph star = StarGraph(9);
  ExperimentSpec spec = Spec(Mechanism::kPtr, {}, 1000);
  const SuccessReport r = RunSuccessRate(star, ComputeSummary(star, 0), spec);
  EXPECT_LE(r.rate, 0.01 + 3 * std::sqrt(0.01 * 0.99 / 1000));

  const Graph g = RandomRegular(400, 20, 1);
  const SpectralSummary s = ComputeSummary(g, 0);
  spec.delta = 0.05;
  spec.p = 1.0;
  const SuccessReport high = RunSuccessRate(g, s, spec);
  spec.p = 0.2;
  const SuccessReport low = RunSuccessRate(g, s, spec);
  EXPECT_GE(high.rate, low.rate);
  EXPECT_LE(high.ci_low, high.rate);
  EXPECT_GE(high.ci_high, high.rate);
}

TEST(OutcomeJsonTest, ReleaseModeHidesDiagnostics) {
  const Graph g = CompleteGraph(5);
  const SpectralSummary s = ComputeSummary(g, 0);
  const ResolvedConfig cfg =
      ResolveConfig(Spec(Mechanism::kPtr, {2}, 1), g, s);
  RngStream rng(1);
  PtrOutcome o = RunPtr(g, s, cfg.ptr, rng);
  const std::string quiet = OutcomeToJson(o, cfg, false).dump();
  EXPECT_THAT(quiet, Not(HasSubstr("f_tilde")));
  EXPECT_THAT(OutcomeToJson(o, cfg, true).dump(), HasSubstr("f_tilde"));
  o.status = PtrStatus::kInfeasible;
  EXPECT_EQ(OutcomeToJson(o, cfg, false)["status"], "no_response");
}

TEST(StatsTest, CompleteAndStar) {
  const Graph g = CompleteGraph(100);
  const StatsReport r =
      ComputeStats(g, ComputeSummary(g, 0), Spec(Mechanism::kPtr, {}, 1));
  EXPECT_NEAR(*r.ls_bound, 2.886e-3, 1e-6);
  EXPECT_NEAR(*r.gs_ls_ratio, 490, 0.5);
  const Graph star = StarGraph(9);
  const StatsReport rs =
      ComputeStats(star, ComputeSummary(star, 0), Spec(Mechanism::kPtr, {}, 1));
  EXPECT_FALSE(rs.ls_bound.has_value());
  EXPECT_EQ(StatsToJson(rs)["ls_bound"], "inapplicable");
}

}  // namespace
}  // namespace privpc
