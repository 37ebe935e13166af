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

// Experiment driver behind the command-line tool: synthetic graph specs,
// sweep configuration, per-trial release rows, aggregates, timing and
// Monte-Carlo success rates.

#ifndef PRIVPC_EXPERIMENT_H_
#define PRIVPC_EXPERIMENT_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "privpc/graph.h"
#include "privpc/ppm.h"
#include "privpc/ptr.h"
#include "privpc/spectral.h"

namespace privpc {

enum class Mechanism { kPtr, kPpm, kNonPrivate, kGaussGlobal };

std::string_view MechanismName(Mechanism m);
// Throws ConfigError on an unknown name.
Mechanism ParseMechanism(std::string_view name);

// "a,b,c" or "start:stop:step" (stop inclusive).
std::vector<int> ParseKGrid(std::string_view text);

// NAME:key=value,key=value with NAME one of
//   complete:n=N
//   star:leaves=L
//   path:n=N
//   er:n=N,p=P | er:n=N,avg_deg=D        [seed=S]
//   planted_clique:n=N,p=P,k=K           [seed=S]
//   regular:n=N,d=D                      [seed=S]
// Unknown names or keys throw ConfigError.
Graph MakeSynthetic(std::string_view text);

struct ExperimentSpec {
  // Label written to the `graph` column.
  std::string graph_name;
  Mechanism mechanism = Mechanism::kPtr;
  std::vector<int> k_grid;
  int trials = 1;
  std::uint64_t seed = 0;
  double eps0 = 1.0;
  double eps1 = 3.0;
  double eps2 = 3.0;
  // Budget of the PPM and gauss_global mechanisms.
  double eps = 3.0;
  // Unset means auto: delta = ln(m)/m and p = DefaultSuccessKnob(delta).
  std::optional<double> delta;
  std::optional<double> p;
  double mu = 3.0 * kGapThreshold;
  // PPM iteration count; 0 means auto.
  std::int64_t iterations = 0;
  int threads = 1;
  // Fill time_ms. Off by default so that reports are byte-reproducible.
  bool record_time = false;

  // Throws ConfigError on trials < 1 or bad budgets. The k grid is checked
  // against the graph by RunExperiment.
  void Validate() const;
};

// Parameters after auto-resolution against a concrete graph.
struct ResolvedConfig {
  PtrConfig ptr;
  PpmConfig ppm;
  // delta of the mechanisms other than PTR (equal to ptr.delta).
  double delta = 0.0;
  double eps_total = 0.0;
  double delta_total = 0.0;
};

ResolvedConfig ResolveConfig(const ExperimentSpec& spec, const Graph& g,
                             const SpectralSummary& s);

// TopTwoEigenpairs, retried with fresh start vectors when the solver does not
// converge. Throws NumericalError after `attempts` failures.
SpectralSummary ComputeSummary(const Graph& g, std::uint64_t seed,
                               int attempts = 3);

struct StatsReport {
  std::int64_t n = 0;
  std::int64_t m = 0;
  ComponentSummary components;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double gap = 0.0;
  double c_pi = 0.0;
  // Unset when the gap is too small for the bound to apply.
  std::optional<double> ls_bound;
  std::optional<double> gs_ls_ratio;
  std::optional<double> smooth_bound;
  double smooth_eps = 0.0;
  double smooth_delta = 0.0;
};

// Smooth bound evaluated at the PTR budget eps0 + eps1 + eps2 and the
// resolved delta.
StatsReport ComputeStats(const Graph& g, const SpectralSummary& s,
                         const ExperimentSpec& spec);
nlohmann::ordered_json StatsToJson(const StatsReport& r);

struct TrialRow {
  std::string graph;
  Mechanism mechanism = Mechanism::kPtr;
  int k = 0;
  int trial = 0;
  // "released", "no_response" or "infeasible".
  std::string status;
  std::optional<double> density;
  std::optional<double> jaccard;
  std::optional<double> time_ms;
  double eps_total = 0.0;
  double delta_total = 0.0;
};

struct KAggregate {
  int k = 0;
  int released = 0;
  int no_response = 0;
  int infeasible = 0;
  // Over released rows; sample standard deviation (0 for a single row).
  double density_mean = 0.0;
  double density_std = 0.0;
  double jaccard_mean = 0.0;
  double jaccard_std = 0.0;
  // Densest-k upper bound from the non-private spectrum.
  double nonprivate_upper_bound = 0.0;
};

struct RunReport {
  ExperimentSpec spec;
  ResolvedConfig config;
  // Sorted by (k, trial).
  std::vector<TrialRow> rows;
  std::vector<KAggregate> aggregates;
};

// One mechanism output per trial (trial t uses RngStream(seed, t)), then one
// row per k. Infeasible or refused trials become rows without density.
RunReport RunExperiment(const Graph& g, const SpectralSummary& s,
                        const ExperimentSpec& spec);

std::vector<KAggregate> Aggregate(const std::vector<TrialRow>& rows,
                                  const SpectralSummary& s, const Graph& g);

// Fixed columns graph,mechanism,k,trial,status,density,jaccard,time_ms,
// eps_total,delta_total followed by the resolved configuration.
void WriteRowsCsv(const RunReport& report, std::ostream& out);
void WriteAggregatesCsv(const RunReport& report, std::ostream& out);
nlohmann::ordered_json RunToJson(const RunReport& report);

struct BenchReport {
  int trials = 0;
  std::int64_t ppm_iterations = 0;
  double ptr_median_ms = 0.0;
  double ppm_median_ms = 0.0;
  double speedup = 0.0;
  int ptr_released = 0;
};

// Median wall time of RunPtr (given `s`) and of the full RunPpm loop.
BenchReport RunBench(const Graph& g, const SpectralSummary& s,
                     const ExperimentSpec& spec);
nlohmann::ordered_json BenchToJson(const BenchReport& r);

struct SuccessReport {
  int trials = 0;
  int released = 0;
  int no_response = 0;
  int infeasible = 0;
  double rate = 0.0;
  double std_error = 0.0;
  // 95% Wilson score interval.
  double ci_low = 0.0;
  double ci_high = 0.0;
  double lower_bound = 0.0;
};

// PTR release rate over spec.trials runs.
SuccessReport RunSuccessRate(const Graph& g, const SpectralSummary& s,
                             const ExperimentSpec& spec);
nlohmann::ordered_json SuccessToJson(const SuccessReport& r);

// Single PTR release. Without `debug_unsafe` only the status, the released
// vector and data-independent parameters are included.
nlohmann::ordered_json OutcomeToJson(const PtrOutcome& outcome,
                                     const ResolvedConfig& config,
                                     bool debug_unsafe);

}  // namespace privpc

#endif  // PRIVPC_EXPERIMENT_H_
