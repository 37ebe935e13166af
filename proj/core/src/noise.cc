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
#include <numbers>

#include <boost/math/special_functions/erf.hpp>

#include "privpc/errors.h"

namespace privpc {

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

double RngStream::Uniform() {
  // Midpoint of one of 2^53 equal cells: never 0, never 1.
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t RngStream::UniformInt(std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x >= threshold) return x % bound;
  }
}

const char* NoiseKindName(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::kLaplace:
      return "laplace";
    case NoiseKind::kGaussian:
      return "gaussian";
    case NoiseKind::kTruncatedBiasedLaplace:
      return "tbl";
  }
  return "unknown";
}

double LaplaceQuantile(double b, double u) {
  if (!(b > 0.0)) throw ConfigError("Laplace scale must be positive");
  if (u < 0.5) return b * std::log(2.0 * u);
  return -b * std::log(2.0 * (1.0 - u));
}

double SampleLaplace(double b, RngStream& rng) {
  return LaplaceQuantile(b, rng.Uniform());
}

double GaussianQuantile(double sigma, double u) {
  if (!(sigma > 0.0)) throw ConfigError("Gaussian sigma must be positive");
  // Phi^{-1}(u) = -sqrt(2) erfc^{-1}(2u); accurate in both tails.
  return -sigma * std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * u);
}

double SampleGaussian(double sigma, RngStream& rng) {
  return GaussianQuantile(sigma, rng.Uniform());
}

TblParams TblParams::ForGapTest(double mu, double eps0) {
  if (!(eps0 > 0.0)) throw ConfigError("eps0 must be positive");
  return TblParams{mu, 1.0 / eps0, 2.0 * mu};
}

void TblParams::Validate() const {
  if (!(mu > 0.0)) throw ConfigError("TBL mu must be positive");
  if (!(lambda > 0.0)) throw ConfigError("TBL lambda must be positive");
  if (!(r >= mu)) throw ConfigError("TBL range must satisfy r >= mu");
}

double TblQuantile(const TblParams& p, double u) {
  // Untruncated Laplace(mu, lambda) CDF at the truncation points.
  const double f0 = 0.5 * std::exp(-p.mu / p.lambda);
  const double fr = 1.0 - 0.5 * std::exp(-(p.r - p.mu) / p.lambda);
  const double v = f0 + u * (fr - f0);
  const double x = v <= 0.5 ? p.mu + p.lambda * std::log(2.0 * v)
                            : p.mu - p.lambda * std::log(2.0 * (1.0 - v));
  return std::clamp(x, 0.0, p.r);
}

NoiseSample SampleTbl(const TblParams& p, RngStream& rng) {
  p.Validate();
  return NoiseSample{NoiseKind::kTruncatedBiasedLaplace,
                     TblQuantile(p, rng.Uniform()), p.lambda, p.mu, p.r};
}

double TblDelta0(double mu, double eps0) {
  if (!(eps0 > 0.0)) throw ConfigError("eps0 must be positive");
  if (!(mu >= 1.0)) throw ConfigError("TBL mu must be >= 1");
  return 0.5 * std::exp(-(mu - 1.0) * eps0) * -std::expm1(-mu * eps0);
}

}  // namespace privpc
