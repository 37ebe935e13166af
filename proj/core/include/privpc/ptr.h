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

// Propose-Test-Release release of the principal eigenvector.
//
//   Phase I   f~ = (gap - t) - z with z ~ TBL(mu, 1/eps0, 2 mu); the graph
//             passes the gap test when f~ >= 0. z >= 0, so a graph with
//             gap <= t never passes.
//   Phase II  GS_phi from f~, beta from (summary, GS_phi), phi from beta when
//             the gap test passed (0 otherwise), phi^ = phi + Lap(GS_phi/eps1).
//   Phase III release normalize(v + N(0, sigma^2 I)),
//             sigma^2 = 2 beta^2 ln(2/delta) / eps2^2, iff
//             phi^ >= GS_phi ln(1/delta) / eps1.
//
// The whole run is (eps0 + eps1 + eps2, delta0 + delta)-DP with delta0 from
// TblDelta0(mu, eps0).

#ifndef PRIVPC_PTR_H_
#define PRIVPC_PTR_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include <Eigen/Core>

#include "privpc/graph.h"
#include "privpc/noise.h"
#include "privpc/spectral.h"

namespace privpc {

struct PtrConfig {
  double eps0 = 1.0;
  double eps1 = 3.0;
  double eps2 = 3.0;
  double delta = 0.01;
  // Success-probability knob: the release probability is >= 1 - delta^p / 2.
  double p = 0.5;
  // TBL centre; 3 t by default.
  double mu = 3.0 * kGapThreshold;

  // Throws ConfigError unless every eps > 0, delta in (0,1), p in (0,1] and
  // mu >= 1.
  void Validate() const;
};

// Defaults used on real datasets: delta = ln(m) / m and p = -1 / log10(delta)
// (a 0.95 success-probability bound), clamped to (0, 1].
double DefaultDelta(std::int64_t num_edges);
double DefaultSuccessKnob(double delta);

enum class PtrStatus { kReleased, kNoResponse, kInfeasible };

std::string_view PtrStatusName(PtrStatus status);

struct PtrDiagnostics {
  NoiseSample gap_noise;
  NoiseSample phi_noise;
  double f_tilde = 0.0;
  bool gap_test_passed = false;
  double gs_phi = 0.0;
  double beta = 0.0;
  double beta_l = 0.0;
  double beta_u = 0.0;
  std::int64_t phi = 0;
  double phi_hat = 0.0;
  double threshold = 0.0;
  double sigma_release = 0.0;
  double delta0 = 0.0;
  double success_lb = 0.0;
  double eps_total = 0.0;
  double delta_total = 0.0;
};

struct PtrOutcome {
  PtrStatus status = PtrStatus::kNoResponse;
  // Unit vector when status == kReleased, empty otherwise.
  Eigen::VectorXd v_ptr;
  PtrDiagnostics diagnostics;

  bool released() const { return status == PtrStatus::kReleased; }
};

// l1 sensitivity of phi: 2 + (2 - sqrt 2) mu when -1 < f~ < 1, else 1.
double GsPhi(double f_tilde, double mu);

// (beta_l, beta_u) = (2 c_pi / gap, 2 sqrt2 / gap (2 - sqrt2 + c_pi)).
// Throws ConfigError when gap == 0.
std::pair<double, double> BetaBounds(const SpectralSummary& s);

// The beta for which the phi fraction equals (p + GS_phi) ln(1/delta) / eps1.
// std::nullopt when gap <= (p + GS_phi) ln(1/delta) / eps1.
std::optional<double> ComputeBeta(const SpectralSummary& s,
                                  const PtrConfig& cfg, double gs_phi);

// ln(1/delta) / eps1 < (1 - 1/sqrt 2) gap / (p + GS_phi), which guarantees
// that ComputeBeta lands in (beta_l, beta_u).
bool CheckParameterCondition(const SpectralSummary& s, const PtrConfig& cfg,
                             double gs_phi);

// The fraction tau = (beta gap^2 - 2 gap c_pi) / (4 + beta gap).
double PhiFraction(const SpectralSummary& s, double beta);

// phi = ceil(max(tau, 0)) when the gap test passed, 0 otherwise. Throws
// ConfigError when the gap test passed and beta lies outside [beta_l, beta_u).
std::int64_t ComputePhi(const SpectralSummary& s, double beta,
                        bool gap_test_passed);

// 1 - delta^p / 2.
double SuccessProbabilityLowerBound(double delta, double p);

// Runs Phases I-III. The RNG is consumed in phase order: one uniform for the
// TBL draw, one for the Laplace draw, then n Gaussians for the release.
// `s` must be the summary of `g`.
PtrOutcome RunPtr(const Graph& g, const SpectralSummary& s,
                  const PtrConfig& cfg, RngStream& rng);

}  // namespace privpc

#endif  // PRIVPC_PTR_H_
