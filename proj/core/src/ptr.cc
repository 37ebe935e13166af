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

#include "privpc/ptr.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

#include "privpc/errors.h"

namespace privpc {

namespace {

// Rounding slack for the ceiling in ComputePhi. Only ever lowers phi.
constexpr double kCeilSlack = 1e-12;

double LogInverse(double delta) { return -std::log(delta); }

}  // namespace

void PtrConfig::Validate() const {
  if (!(eps0 > 0.0) || !(eps1 > 0.0) || !(eps2 > 0.0)) {
    throw ConfigError("eps0, eps1 and eps2 must be positive");
  }
  if (!(delta > 0.0 && delta < 1.0)) throw ConfigError("delta must be in (0, 1)");
  if (!(p > 0.0 && p <= 1.0)) throw ConfigError("p must be in (0, 1]");
  if (!(mu >= 1.0) || !std::isfinite(mu)) throw ConfigError("mu must be >= 1");
}

double DefaultDelta(std::int64_t num_edges) {
  if (num_edges < 3) throw ConfigError("default delta needs m >= 3");
  const double m = static_cast<double>(num_edges);
  return std::log(m) / m;
}

double DefaultSuccessKnob(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw ConfigError("delta must be in (0, 1)");
  return std::min(1.0, -1.0 / std::log10(delta));
}

std::string_view PtrStatusName(PtrStatus status) {
  switch (status) {
    case PtrStatus::kReleased:
      return "released";
    case PtrStatus::kNoResponse:
      return "no_response";
    case PtrStatus::kInfeasible:
      return "infeasible";
  }
  return "unknown";
}

double GsPhi(double f_tilde, double mu) {
  if (f_tilde > -1.0 && f_tilde < 1.0) {
    return 2.0 + (2.0 - std::numbers::sqrt2) * mu;
  }
  return 1.0;
}

std::pair<double, double> BetaBounds(const SpectralSummary& s) {
  if (!(s.gap > 0.0)) throw ConfigError("beta bounds need a positive gap");
  const double lower = 2.0 * s.c_pi / s.gap;
  const double upper =
      2.0 * std::numbers::sqrt2 / s.gap * (2.0 - std::numbers::sqrt2 + s.c_pi);
  return {lower, upper};
}

std::optional<double> ComputeBeta(const SpectralSummary& s,
                                  const PtrConfig& cfg, double gs_phi) {
  const double target = (cfg.p + gs_phi) * LogInverse(cfg.delta) / cfg.eps1;
  const double denom = s.gap - target;
  if (!(denom > 0.0)) return std::nullopt;
  return 2.0 / s.gap * ((2.0 * target + s.gap * s.c_pi) / denom);
}

bool CheckParameterCondition(const SpectralSummary& s, const PtrConfig& cfg,
                             double gs_phi) {
  return LogInverse(cfg.delta) / cfg.eps1 <
         (1.0 - 1.0 / std::numbers::sqrt2) * s.gap / (cfg.p + gs_phi);
}

double PhiFraction(const SpectralSummary& s, double beta) {
  return (beta * s.gap * s.gap - 2.0 * s.gap * s.c_pi) / (4.0 + beta * s.gap);
}

std::int64_t ComputePhi(const SpectralSummary& s, double beta,
                        bool gap_test_passed) {
  if (!gap_test_passed) return 0;
  const auto [lower, upper] = BetaBounds(s);
  if (!(beta >= lower * (1.0 - kCeilSlack) && beta < upper)) {
    throw ConfigError("beta outside (beta_l, beta_u)");
  }
  const double tau = std::max(0.0, PhiFraction(s, beta));
  return static_cast<std::int64_t>(
      std::ceil(tau - kCeilSlack * std::max(1.0, tau)));
}

double SuccessProbabilityLowerBound(double delta, double p) {
  if (!(delta > 0.0 && delta < 1.0)) throw ConfigError("delta must be in (0, 1)");
  if (!(p > 0.0 && p <= 1.0)) throw ConfigError("p must be in (0, 1]");
  return 1.0 - 0.5 * std::pow(delta, p);
}

PtrOutcome RunPtr(const Graph& g, const SpectralSummary& s,
                  const PtrConfig& cfg, RngStream& rng) {
  cfg.Validate();
  if (s.v.size() != g.num_vertices()) {
    throw ConfigError("summary does not match graph");
  }
  PtrOutcome out;
  PtrDiagnostics& d = out.diagnostics;
  d.delta0 = TblDelta0(cfg.mu, cfg.eps0);
  d.eps_total = cfg.eps0 + cfg.eps1 + cfg.eps2;
  d.delta_total = d.delta0 + cfg.delta;
  d.success_lb = SuccessProbabilityLowerBound(cfg.delta, cfg.p);
  if (s.gap > 0.0) std::tie(d.beta_l, d.beta_u) = BetaBounds(s);

  // Phase I: private gap test.
  d.gap_noise = SampleTbl(TblParams::ForGapTest(cfg.mu, cfg.eps0), rng);
  d.f_tilde = (s.gap - kGapThreshold) - d.gap_noise.value;
  d.gap_test_passed = d.f_tilde >= 0.0;

  // Phase II: distance to instability.
  d.gs_phi = GsPhi(d.f_tilde, cfg.mu);
  d.threshold = d.gs_phi * LogInverse(cfg.delta) / cfg.eps1;
  const std::optional<double> beta = ComputeBeta(s, cfg, d.gs_phi);
  if (!beta.has_value()) {
    out.status = PtrStatus::kInfeasible;
    return out;
  }
  d.beta = *beta;
  if (d.gap_test_passed && !(d.beta >= d.beta_l && d.beta < d.beta_u)) {
    out.status = PtrStatus::kInfeasible;
    return out;
  }
  d.phi = ComputePhi(s, d.beta, d.gap_test_passed);
  const double b = d.gs_phi / cfg.eps1;
  d.phi_noise = NoiseSample{NoiseKind::kLaplace, SampleLaplace(b, rng), b};
  d.phi_hat = static_cast<double>(d.phi) + d.phi_noise.value;

  // Phase III: release.
  d.sigma_release = d.beta * std::sqrt(2.0 * std::log(2.0 / cfg.delta)) / cfg.eps2;
  if (!(d.phi_hat >= d.threshold)) {
    out.status = PtrStatus::kNoResponse;
    return out;
  }
  out.v_ptr.resize(s.v.size());
  for (Eigen::Index i = 0; i < s.v.size(); ++i) {
    out.v_ptr[i] = s.v[i] + SampleGaussian(d.sigma_release, rng);
  }
  const double norm = out.v_ptr.norm();
  if (!(norm > 0.0)) throw NumericalError("released vector has zero norm");
  out.v_ptr /= norm;
  out.status = PtrStatus::kReleased;
  return out;
}

}  // namespace privpc
