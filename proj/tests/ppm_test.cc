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

#include "privpc/ppm.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "privpc/errors.h"
#include "privpc/generators.h"
#include "privpc/spectral.h"

namespace privpc {
namespace {

TEST(PpmSigmaTest, Formula) {
  EXPECT_NEAR(PpmSigma(3, 0.01, 5), std::sqrt(20 * std::log(100.0)) / 3, 1e-12);
  EXPECT_NEAR(PpmSigma(3, 0.01, 5), 3.199, 1e-3);
  EXPECT_NEAR(PpmSigma(2, std::exp(-1.0), 1), 1.0, 1e-12);
  for (std::int64_t l : {1, 2, 4, 8, 16}) {
    EXPECT_NEAR(PpmSigma(1, 0.1, 4 * l) / PpmSigma(1, 0.1, l), 2.0, 1e-12);
  }
}

TEST(AutoIterationsTest, Formula) {
  EXPECT_EQ(AutoIterations(99, 98, 100), 5);
  EXPECT_EQ(AutoIterations(40, 37, 4000), 9);
  EXPECT_EQ(AutoIterations(1, 100, 10), 1);
  EXPECT_THROW(AutoIterations(3, 0, 10), ConfigError);
}

TEST(RunPpmTest, ZeroNoiseIsThePowerMethod) {
  const Graph g = CompleteGraph(100);
  const SpectralSummary s = TopTwoEigenpairs(g);
  PpmConfig cfg;
  cfg.iterations = 20;
  cfg.noise_multiplier = 0;
  RngStream rng(1);
  const PpmResult r = RunPpm(g, cfg, rng);
  EXPECT_GE(std::abs(r.v.dot(s.v)), 1 - 1e-8);
  EXPECT_NEAR(r.v.norm(), 1.0, 1e-10);
}

// The median projection error stays below C sigma ||v||_inf sqrt(n ln L) / gap
// with C calibrated once on this instance and frozen.
TEST(RunPpmTest, CompleteGraphErrorWithinCalibratedBound) {
  // Observed ratio at calibration time was 0.86.
  constexpr double kFrozenC = 1.0;
  const Graph g = CompleteGraph(100);
  const SpectralSummary s = TopTwoEigenpairs(g);
  PpmConfig cfg;
  cfg.eps = 3;
  cfg.delta = 0.01;
  cfg.iterations = AutoIterations(s.lambda1, s.gap, 100);
  ASSERT_EQ(cfg.iterations, 5);
  std::vector<double> errors;
  for (int t = 0; t < 100; ++t) {
    RngStream rng(2, static_cast<std::uint64_t>(t));
    const PpmResult r = RunPpm(g, cfg, rng);
    EXPECT_NEAR(r.v.norm(), 1.0, 1e-10);
    errors.push_back((s.v - r.v * r.v.dot(s.v)).norm());
  }
  std::nth_element(errors.begin(), errors.begin() + 50, errors.end());
  const double sigma = PpmSigma(3, 0.01, 5);
  const double bound = kFrozenC * sigma * s.v.cwiseAbs().maxCoeff() *
                       std::sqrt(100 * std::log(5.0)) / s.gap;
  EXPECT_LE(errors[50], bound);
}

TEST(RunPpmTest, DeterministicAndValidated) {
  const Graph g = ErdosRenyi(200, 0.05, 3);
  PpmConfig cfg;
  cfg.iterations = 7;
  RngStream a(4, 2);
  RngStream b(4, 2);
  const PpmResult x = RunPpm(g, cfg, a);
  EXPECT_EQ(x.v, RunPpm(g, cfg, b).v);
  EXPECT_EQ(x.iterations, 7);
  EXPECT_EQ(x.sigma, PpmSigma(cfg.eps, cfg.delta, 7));
  cfg.iterations = 0;
  EXPECT_THROW(RunPpm(g, cfg, a), ConfigError);
  cfg.iterations = 3;
  cfg.eps = -1;
  EXPECT_THROW(RunPpm(g, cfg, a), ConfigError);
}

}  // namespace
}  // namespace privpc
