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

// Seeded noise samplers. Every continuous sampler is an inverse CDF applied
// to a uniform on the open interval (0, 1), so a (seed, stream) pair fixes
// the whole sample sequence on any IEEE-754 platform.
//
// These are textbook floating-point samplers. They are not hardened against
// the floating-point side channels discussed in the secure-DP literature
// (e.g. Mironov's attack on the Laplace mechanism).

#ifndef PRIVPC_NOISE_H_
#define PRIVPC_NOISE_H_

#include <cstdint>
#include <random>

namespace privpc {

// Independent, reproducible random stream. Parallel trials use
// stream = trial index under a shared seed.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  std::uint64_t NextU64() { return engine_(); }
  // Uniform on the open interval (0, 1) with 53 random bits.
  double Uniform();
  // Uniform integer in [0, bound); bound > 0.
  std::uint64_t UniformInt(std::uint64_t bound);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

enum class NoiseKind { kLaplace, kGaussian, kTruncatedBiasedLaplace };

const char* NoiseKindName(NoiseKind kind);

// A recorded draw. `scale` is b (Laplace), sigma (Gaussian) or lambda (TBL);
// `center` and `upper` are only meaningful for TBL.
struct NoiseSample {
  NoiseKind kind = NoiseKind::kLaplace;
  double value = 0.0;
  double scale = 0.0;
  double center = 0.0;
  double upper = 0.0;
};

// Lap(0, b) quantile at u in (0, 1).
double LaplaceQuantile(double b, double u);
double SampleLaplace(double b, RngStream& rng);

// N(0, sigma^2) quantile at u in (0, 1).
double GaussianQuantile(double sigma, double u);
double SampleGaussian(double sigma, RngStream& rng);

// Truncated biased Laplace: Lap(mu, lambda) conditioned on [0, r].
struct TblParams {
  double mu = 0.0;
  double lambda = 1.0;
  double r = 0.0;

  // The gap-test calibration: lambda = 1/eps0, r = 2 mu.
  static TblParams ForGapTest(double mu, double eps0);
  // Throws ConfigError unless mu > 0, lambda > 0 and r >= mu.
  void Validate() const;
};

double TblQuantile(const TblParams& p, double u);
NoiseSample SampleTbl(const TblParams& p, RngStream& rng);

// Smallest delta0 for which adding TBL(mu, 1/eps0, 2 mu) noise to a
// 1-sensitive statistic is (eps0, delta0)-DP:
//   delta0 = 1/2 exp(-(mu - 1) eps0) (1 - exp(-mu eps0)).
double TblDelta0(double mu, double eps0);

}  // namespace privpc

#endif  // PRIVPC_NOISE_H_
