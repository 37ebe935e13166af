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

#include "privpc/spectral.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "gtest/gtest.h"
#include "privpc/errors.h"
#include "privpc/generators.h"
#include "testing/oracles.h"

namespace privpc {
namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

void ExpectMatchesDense(const Graph& g, const std::string& name) {
  SCOPED_TRACE(name);
  const SpectralSummary s = TopTwoEigenpairs(g);
  const testing::DenseSpectrum d = testing::DenseEigen(g);
  EXPECT_TRUE(s.converged);
  EXPECT_NEAR(std::abs(s.lambda1), std::abs(d.values[0]), 1e-8);
  EXPECT_NEAR(std::abs(s.lambda2), std::abs(d.values[1]), 1e-8);
  EXPECT_LT(testing::AngleToEigenspace(d, s.v, s.lambda1), 1e-6);
  EXPECT_NEAR(s.v.norm(), 1.0, 1e-10);
  EXPECT_GE(s.v.sum(), 0.0);
  EXPECT_GE(s.gap, 0.0);
  EXPECT_GT(s.c_pi, 0.0);
  EXPECT_LE(s.c_pi, kSqrt2 * s.v.cwiseAbs().maxCoeff() + 1e-12);
}

TEST(TopTwoEigenpairsTest, CompleteGraph) {
  const SpectralSummary s = TopTwoEigenpairs(CompleteGraph(100));
  EXPECT_NEAR(s.lambda1, 99.0, 1e-9);
  EXPECT_NEAR(s.lambda2, -1.0, 1e-9);
  EXPECT_NEAR(s.gap, 98.0, 1e-9);
  EXPECT_LT((s.v - Eigen::VectorXd::Constant(100, 0.1)).norm(), 1e-8);
  EXPECT_LE(s.residual, 1e-10 * 99);
}

TEST(TopTwoEigenpairsTest, StarHasZeroGap) {
  const SpectralSummary s = TopTwoEigenpairs(StarGraph(9));
  EXPECT_NEAR(std::abs(s.lambda1), 3.0, 1e-9);
  EXPECT_NEAR(std::abs(s.lambda2), 3.0, 1e-9);
  EXPECT_NEAR(s.gap, 0.0, 1e-9);
}

TEST(TopTwoEigenpairsTest, MatchesDenseOracle) {
  ExpectMatchesDense(CompleteGraph(30), "complete");
  ExpectMatchesDense(StarGraph(40), "star");
  ExpectMatchesDense(PathGraph(50), "path");
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    ExpectMatchesDense(ErdosRenyi(150, 0.05, seed), "er");
    ExpectMatchesDense(RandomRegular(120, 6, seed), "regular");
    ExpectMatchesDense(PlantClique(180, 0.05, 15, seed).graph, "planted");
  }
}

TEST(TopTwoEigenpairsTest, PerronVectorOnConnectedGraphs) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = ErdosRenyi(200, 0.05, seed);
    if (Components(g).count != 1) continue;
    const SpectralSummary s = TopTwoEigenpairs(g);
    EXPECT_GE(s.v.minCoeff(), -1e-10);
  }
}

TEST(TopTwoEigenpairsTest, SeedDoesNotChangeResult) {
  const Graph g = ErdosRenyi(300, 0.03, 9);
  EigenSolverOptions a;
  EigenSolverOptions b;
  b.seed = 99;
  const SpectralSummary sa = TopTwoEigenpairs(g, a);
  const SpectralSummary sb = TopTwoEigenpairs(g, b);
  EXPECT_NEAR(sa.lambda1, sb.lambda1, 1e-9);
  EXPECT_NEAR(sa.lambda2, sb.lambda2, 1e-9);
  EXPECT_LT((sa.v - sb.v).norm(), 1e-7);
}

TEST(TopTwoEigenpairsTest, RejectsBadInput) {
  EXPECT_THROW(TopTwoEigenpairs(CompleteGraph(1)), ConfigError);
  EigenSolverOptions opts;
  opts.tol = 0.0;
  EXPECT_THROW(TopTwoEigenpairs(CompleteGraph(5), opts), ConfigError);
}

TEST(TopTwoEnergyTest, UsesTwoLargestSignedEntries) {
  Eigen::VectorXd v(4);
  v << 0.5, -0.9, 0.3, 0.1;
  EXPECT_DOUBLE_EQ(TopTwoEnergy(v), std::sqrt(0.25 + 0.09));
}

SpectralSummary K100() { return TopTwoEigenpairs(CompleteGraph(100)); }

TEST(SensitivityBoundsTest, LocalSensitivity) {
  const auto ls = LocalSensitivityBound(K100());
  ASSERT_TRUE(ls.has_value());
  EXPECT_NEAR(*ls, 2 * std::sqrt(2.0 / 100) / 98, 1e-12);
  EXPECT_NEAR(*ls, 2.886e-3, 1e-6);
  EXPECT_FALSE(LocalSensitivityBound(TopTwoEigenpairs(StarGraph(9))));
}

TEST(SensitivityBoundsTest, Theta) {
  const SpectralSummary s = K100();
  EXPECT_EQ(*ThetaBound(s, 0), *LocalSensitivityBound(s));
  EXPECT_NEAR(*ThetaBound(s, 10), (2.0 / 88) * (20.0 / 98 + 0.141421356), 1e-9);
  EXPECT_NEAR(*ThetaBound(s, 10), 7.852e-3, 1e-6);
  EXPECT_TRUE(ThetaBound(s, 28));
  EXPECT_FALSE(ThetaBound(s, 29));
  double prev = *ThetaBound(s, 0);
  for (std::int64_t d = 1; d <= 28; ++d) {
    const double cur = *ThetaBound(s, d);
    EXPECT_GT(cur, prev);
    prev = cur;
  }
}

TEST(SensitivityBoundsTest, SmoothBound) {
  SpectralSummary big;
  big.gap = 100;
  big.c_pi = 0.01;
  const double nu = kSqrt2 / (kSqrt2 - 1);
  const double beta = 3.0 / (4 * (1e6 + std::log(2 / 1e-6)));
  const double expected = kSqrt2 * std::exp(-beta * 100 / nu);
  const auto value = SmoothSensitivityBound(big, 1000000, 3.0, 1e-6);
  ASSERT_TRUE(value.has_value());
  EXPECT_NEAR(*value, expected, 1e-12);
  EXPECT_NEAR(*value, 1.41418, 1e-4);

  const SpectralSummary s = K100();
  const double b100 = 3.0 / (4 * (100 + std::log(2 / 0.01)));
  const double branch1 = 2 * kSqrt2 / s.gap * (2 / nu + s.c_pi);
  const double branch2 = kSqrt2 * std::exp(-b100 * s.gap / nu);
  EXPECT_NEAR(*SmoothSensitivityBound(s, 100, 3.0, 0.01),
              std::max(branch1, branch2), 1e-12);

  SpectralSummary small;
  small.gap = 4.8;
  small.c_pi = 0.5;
  EXPECT_FALSE(SmoothSensitivityBound(small, 100, 3.0, 0.01));
}

// Every single-edge flip of a small well-gapped graph moves v by at most the
// local sensitivity bound.
TEST(SensitivityBoundsTest, SingleEdgeFlipSoundness) {
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 3 && seed < 50; ++seed) {
    const Graph g = ErdosRenyi(30, 0.4, seed);
    if (Components(g).count != 1) continue;
    const SpectralSummary s = TopTwoEigenpairs(g);
    const auto ls = LocalSensitivityBound(s);
    if (!ls) continue;
    ++checked;
    Eigen::MatrixXd a = testing::DenseAdjacency(g);
    const Eigen::VectorXd v = testing::DensePrincipal(a);
    for (int i = 0; i < 30; ++i) {
      for (int j = i + 1; j < 30; ++j) {
        a(i, j) = a(j, i) = 1.0 - a(i, j);
        EXPECT_LE(testing::SignedDistance(v, testing::DensePrincipal(a)),
                  *ls + 1e-9);
        a(i, j) = a(j, i) = 1.0 - a(i, j);
      }
    }
  }
  EXPECT_EQ(checked, 3);
}

}  // namespace
}  // namespace privpc
