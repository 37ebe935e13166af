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

#ifndef PRIVPC_SPECTRAL_H_
#define PRIVPC_SPECTRAL_H_

#include <cstdint>
#include <numbers>
#include <optional>

#include <Eigen/Core>

#include "privpc/graph.h"

namespace privpc {

// Gap threshold t = 2(sqrt 2 + 1) of the private gap test.
inline constexpr double kGapThreshold = 2.0 * (std::numbers::sqrt2 + 1.0);
// Global l2 sensitivity of the principal eigenvector under edge-DP.
inline constexpr double kEigenvectorGlobalSensitivity = std::numbers::sqrt2;

// Top-two eigenpairs of the adjacency matrix ordered by magnitude, plus the
// statistics the mechanisms read from them.
struct SpectralSummary {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  // Unit eigenvector for lambda1, sign-fixed so that sum(v) >= 0.
  Eigen::VectorXd v;
  // |lambda1| - |lambda2|, clamped at 0.
  double gap = 0.0;
  // sqrt(v_(1)^2 + v_(2)^2) over the two largest entries of v.
  double c_pi = 0.0;

  std::int64_t iterations_used = 0;
  // ||A v - lambda1 v||_2.
  double residual = 0.0;
  // Residual of the deflated second pair.
  double residual2 = 0.0;
  bool converged = false;
};

struct EigenSolverOptions {
  // Relative residual target: ||A v - lambda v|| <= tol * |lambda1|.
  double tol = 1e-10;
  // Budget of matrix-vector products for each of the two pairs.
  std::int64_t max_iter = 100000;
  std::uint64_t seed = 0;
  // Krylov basis size for the deflated solve (clamped to n - 1).
  int krylov_dim = 48;
};

// Power iteration from a seeded positive start for (lambda1, v), then the
// magnitude-dominant eigenvalue of the deflated operator
// x -> A x - lambda1 (v.x) v for lambda2. Never throws on slow convergence:
// `converged` is false and the residuals say how far off the result is.
// Throws ConfigError when n < 2 or tol <= 0.
SpectralSummary TopTwoEigenpairs(const Graph& g,
                                 const EigenSolverOptions& options = {});

// sqrt of the summed squares of the two largest entries of v.
double TopTwoEnergy(const Eigen::VectorXd& v);

// Flips v so that its entries sum to a non-negative value.
void FixSign(Eigen::VectorXd& v);

// Local sensitivity bound 2 c_pi / gap, applicable when
// gap > sqrt(2)(sqrt(2) + 1).
std::optional<double> LocalSensitivityBound(const SpectralSummary& s);

// theta(d) = 2 / (gap - d) * (2 d / gap + c_pi), the sensitivity bound for
// graphs within edit distance d. Requires gap > 2(sqrt 2 + 1) and
// d < (1 - 1/sqrt 2) gap.
std::optional<double> ThetaBound(const SpectralSummary& s, std::int64_t dist);

// beta-smooth upper bound on the eigenvector sensitivity with
// beta = eps / (4 (n + ln(2 / delta))):
//   max{ 2 sqrt2 / gap (2 / nu + c_pi), sqrt2 exp(-beta gap / nu) },
//   nu = sqrt2 / (sqrt2 - 1).
// Reported as a diagnostic only. Applicable when gap > sqrt(2) nu.
std::optional<double> SmoothSensitivityBound(const SpectralSummary& s,
                                             std::int64_t n, double eps,
                                             double delta);

}  // namespace privpc

#endif  // PRIVPC_SPECTRAL_H_
