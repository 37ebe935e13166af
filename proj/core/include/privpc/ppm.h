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

// Private power method baseline: L rounds of w = A v + g,
// g ~ N(0, ||v||_inf^2 sigma^2 I), v = w / ||w||, with
// sigma = sqrt(4 L ln(1/delta)) / eps.

#ifndef PRIVPC_PPM_H_
#define PRIVPC_PPM_H_

#include <cstdint>

#include <Eigen/Core>

#include "privpc/graph.h"
#include "privpc/noise.h"

namespace privpc {

struct PpmConfig {
  double eps = 3.0;
  double delta = 0.01;
  // Iteration count; 0 selects AutoIterations().
  std::int64_t iterations = 0;
  // Test hook: multiplies sigma. 0 gives the plain power method.
  double noise_multiplier = 1.0;

  void Validate() const;
};

double PpmSigma(double eps, double delta, std::int64_t iterations);

// round(lambda1 ln(n) / gap), at least 1. Throws ConfigError when gap <= 0.
std::int64_t AutoIterations(double lambda1, double gap, std::int64_t n);

struct PpmResult {
  Eigen::VectorXd v;
  std::int64_t iterations = 0;
  double sigma = 0.0;
  // max over the iterates v_0..v_{L-1} of ||v_l||_inf.
  double max_inf_norm = 0.0;
};

// `iterations` must be resolved (> 0) in `cfg`.
PpmResult RunPpm(const Graph& g, const PpmConfig& cfg, RngStream& rng);

}  // namespace privpc

#endif  // PRIVPC_PPM_H_
