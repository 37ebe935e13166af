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

#include "privpc/errors.h"

namespace privpc {

namespace {

constexpr int kMaxZeroNormRetries = 3;

}  // namespace

void PpmConfig::Validate() const {
  if (!(eps > 0.0)) throw ConfigError("eps must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw ConfigError("delta must be in (0, 1)");
  if (iterations < 0) throw ConfigError("iterations must be positive");
  if (!(noise_multiplier >= 0.0)) {
    throw ConfigError("noise multiplier must be non-negative");
  }
}

double PpmSigma(double eps, double delta, std::int64_t iterations) {
  if (!(eps > 0.0) || !(delta > 0.0 && delta < 1.0) || iterations < 1) {
    throw ConfigError("sigma needs eps > 0, delta in (0,1), L >= 1");
  }
  return std::sqrt(4.0 * static_cast<double>(iterations) * -std::log(delta)) /
         eps;
}

std::int64_t AutoIterations(double lambda1, double gap, std::int64_t n) {
  if (!(gap > 0.0)) {
    throw ConfigError("automatic iteration count needs a positive gap");
  }
  const double l = std::round(std::abs(lambda1) *
                              std::log(static_cast<double>(n)) / gap);
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(l));
}

PpmResult RunPpm(const Graph& g, const PpmConfig& cfg, RngStream& rng) {
  cfg.Validate();
  if (cfg.iterations < 1) throw ConfigError("PPM iteration count unresolved");
  const VertexId n = g.num_vertices();
  if (n < 2) throw ConfigError("PPM needs n >= 2");

  PpmResult out;
  out.iterations = cfg.iterations;
  out.sigma = PpmSigma(cfg.eps, cfg.delta, cfg.iterations);
  const double sigma = out.sigma * cfg.noise_multiplier;

  // Random unit start direction.
  Eigen::VectorXd v(n);
  for (VertexId i = 0; i < n; ++i) v[i] = SampleGaussian(1.0, rng);
  v.normalize();

  Eigen::VectorXd w(n);
  for (std::int64_t l = 0; l < cfg.iterations; ++l) {
    const double inf_norm = v.lpNorm<Eigen::Infinity>();
    out.max_inf_norm = std::max(out.max_inf_norm, inf_norm);
    const double scale = inf_norm * sigma;
    double norm = 0.0;
    for (int attempt = 0;; ++attempt) {
      g.Multiply(v, w);
      if (scale > 0.0) {
        for (VertexId i = 0; i < n; ++i) w[i] += SampleGaussian(scale, rng);
      }
      norm = w.norm();
      if (norm > 0.0) break;
      if (attempt + 1 >= kMaxZeroNormRetries || scale == 0.0) {
        throw NumericalError("PPM iterate has zero norm");
      }
    }
    v = w / norm;
  }
  out.v = std::move(v);
  return out;
}

}  // namespace privpc
