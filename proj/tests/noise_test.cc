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

#include "privpc/noise.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "privpc/errors.h"
#include "testing/oracles.h"

namespace privpc {
namespace {

constexpr int kNumSamples = 1000000;

TEST(RngStreamTest, SameSeedAndStreamReproduce) {
  RngStream a(7, 3);
  RngStream b(7, 3);
  RngStream c(7, 4);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const double x = a.Uniform();
    EXPECT_EQ(x, b.Uniform());
    differs |= x != c.Uniform();
    EXPECT_GT(x, 0.0);
    EXPECT_LT(x, 1.0);
  }
  EXPECT_TRUE(differs);
}

TEST(LaplaceTest, MedianIsZero) {
  EXPECT_EQ(LaplaceQuantile(1.0, 0.5), 0.0);
  EXPECT_EQ(LaplaceQuantile(1.0 / 3.0, 0.5), 0.0);
  EXPECT_THROW(LaplaceQuantile(0.0, 0.5), ConfigError);
}

TEST(LaplaceTest, TailMassMatchesExponential) {
  RngStream rng(1);
  const double b = 0.7;
  std::vector<double> xs(kNumSamples);
  for (double& x : xs) x = SampleLaplace(b, rng);
  for (double t : {0.5, 1.0, 2.0}) {
    const double expected = std::exp(-t);
    const double hits = static_cast<double>(std::count_if(
        xs.begin(), xs.end(), [&](double x) { return std::abs(x) >= t * b; }));
    const double se = std::sqrt(expected * (1 - expected) / kNumSamples);
    EXPECT_NEAR(hits / kNumSamples, expected, 4 * se) << "t=" << t;
  }
}

TEST(GaussianTest, Moments) {
  RngStream rng(2);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int i = 0; i < kNumSamples; ++i) {
    const double x = SampleGaussian(1.0, rng);
    sum += x;
    sum_sq += x * x;
  }
  const double mean = sum / kNumSamples;
  const double var = sum_sq / kNumSamples - mean * mean;
  EXPECT_GE(var, 0.99);
  EXPECT_LE(var, 1.01);

  double sum2 = 0.0;
  for (int i = 0; i < kNumSamples; ++i) sum2 += SampleGaussian(2.0, rng);
  EXPECT_NEAR(sum2 / kNumSamples, 0.0, 0.01);
  EXPECT_THROW(SampleGaussian(0.0, rng), ConfigError);
}

TEST(GaussianTest, QuantileKnownValues) {
  EXPECT_EQ(GaussianQuantile(1.0, 0.5), 0.0);
  EXPECT_NEAR(GaussianQuantile(1.0, 0.975), 1.959963984540054, 1e-12);
  EXPECT_NEAR(GaussianQuantile(2.0, 0.1586552539314571), -2.0, 1e-10);
}

TEST(TblTest, MedianDrawIsCentre) {
  const TblParams p = TblParams::ForGapTest(5.0, 1.0);
  EXPECT_NEAR(TblQuantile(p, 0.5), 5.0, 1e-12);
}

TEST(TblTest, SupportAndKolmogorovSmirnov) {
  const double mu = 14.485;
  const TblParams p = TblParams::ForGapTest(mu, 1.0);
  RngStream rng(3);
  std::vector<double> xs(kNumSamples);
  for (double& x : xs) {
    const NoiseSample s = SampleTbl(p, rng);
    EXPECT_EQ(s.kind, NoiseKind::kTruncatedBiasedLaplace);
    x = s.value;
  }
  std::sort(xs.begin(), xs.end());
  EXPECT_GE(xs.front(), 0.0);
  EXPECT_LE(xs.back(), 2 * mu);
  double ks = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = testing::TruncatedLaplaceCdf(xs[i], mu, 1.0, 2 * mu);
    ks = std::max({ks, std::abs(f - static_cast<double>(i) / kNumSamples),
                   std::abs(f - static_cast<double>(i + 1) / kNumSamples)});
  }
  EXPECT_LT(ks, 0.002);
}

TEST(TblTest, EmpiricalCdfBelowCentre) {
  const double mu = 5.0;
  const TblParams p = TblParams::ForGapTest(mu, 1.0);
  RngStream rng(4);
  int below = 0;
  for (int i = 0; i < kNumSamples; ++i) below += SampleTbl(p, rng).value <= mu - 1;
  const double g = testing::TruncatedLaplaceCdf(mu - 1, mu, 1.0, 2 * mu);
  const double se = std::sqrt(g * (1 - g) / kNumSamples);
  EXPECT_NEAR(static_cast<double>(below) / kNumSamples, g, 3 * se);
}

TEST(TblTest, Delta0) {
  const double d = TblDelta0(3 * 2 * (std::sqrt(2.0) + 1), 1.0);
  EXPECT_GE(d, 6.5e-7);
  EXPECT_LE(d, 7.5e-7);
  EXPECT_NEAR(TblDelta0(1.0, 1.0), 0.5 * (1 - std::exp(-1.0)), 1e-15);
  double prev = TblDelta0(1.0, 1.0);
  for (double mu = 1.5; mu < 30; mu += 0.5) {
    const double cur = TblDelta0(mu, 1.0);
    EXPECT_LT(cur, prev);
    prev = cur;
  }
  EXPECT_THROW(TblDelta0(0.5, 1.0), ConfigError);
}

}  // namespace
}  // namespace privpc
