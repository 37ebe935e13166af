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

#include "privpc/experiment.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>
#include <tuple>
#include <utility>

#include "privpc/errors.h"
#include "privpc/generators.h"
#include "privpc/noise.h"
#include "privpc/subsets.h"

namespace privpc {
namespace {

using Clock = std::chrono::steady_clock;

double ElapsedMs(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

std::vector<std::string_view> Split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = text.find(sep, pos);
    out.push_back(text.substr(pos, next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

template <typename T>
T ParseNumber(std::string_view text, std::string_view what) {
  T value{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ConfigError("cannot parse " + std::string(what) + " from '" +
                      std::string(text) + "'");
  }
  return value;
}

// key=value parameters of a synthetic spec with use tracking.
class Params {
 public:
  explicit Params(std::string_view text) {
    if (text.empty()) return;
    for (std::string_view item : Split(text, ',')) {
      const std::size_t eq = item.find('=');
      if (eq == std::string_view::npos) {
        throw ConfigError("expected key=value in '" + std::string(item) + "'");
      }
      values_[std::string(item.substr(0, eq))] =
          std::string(item.substr(eq + 1));
    }
  }

  bool has(const std::string& key) const { return values_.count(key) > 0; }

  template <typename T>
  T Get(const std::string& key) {
    auto it = values_.find(key);
    if (it == values_.end()) {
      throw ConfigError("missing synthetic parameter '" + key + "'");
    }
    used_.push_back(key);
    return ParseNumber<T>(it->second, key);
  }

  template <typename T>
  T Get(const std::string& key, T fallback) {
    return has(key) ? Get<T>(key) : fallback;
  }

  void CheckAllUsed() const {
    for (const auto& [key, value] : values_) {
      if (std::find(used_.begin(), used_.end(), key) == used_.end()) {
        throw ConfigError("unknown synthetic parameter '" + key + "'");
      }
    }
  }

 private:
  std::map<std::string, std::string> values_;
  std::vector<std::string> used_;
};

std::string FormatDouble(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

std::string FormatOptional(const std::optional<double>& x) {
  return x ? FormatDouble(*x) : std::string();
}

nlohmann::json OptionalJson(const std::optional<double>& x) {
  return x ? nlohmann::json(*x) : nlohmann::json(nullptr);
}

double Median(std::vector<double> xs) {
  if (xs.empty()) return 0.0;
  const std::size_t mid = xs.size() / 2;
  std::nth_element(xs.begin(), xs.begin() + mid, xs.end());
  double m = xs[mid];
  if (xs.size() % 2 == 0) {
    m = 0.5 * (m + *std::max_element(xs.begin(), xs.begin() + mid));
  }
  return m;
}

// Runs body(trial) for trial in [0, trials) on up to `threads` workers.
template <typename Body>
void ParallelTrials(int trials, int threads, Body&& body) {
  const int workers = std::max(1, std::min(threads, trials));
  if (workers == 1) {
    for (int t = 0; t < trials; ++t) body(t);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int t = next++; t < trials; t = next++) {
        try {
          body(t);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

struct MechanismDraw {
  PtrStatus status = PtrStatus::kReleased;
  Eigen::VectorXd v;
  double time_ms = 0.0;
};

MechanismDraw Draw(const Graph& g, const SpectralSummary& s,
                   const ExperimentSpec& spec, const ResolvedConfig& cfg,
                   RngStream& rng) {
  MechanismDraw out;
  const auto start = Clock::now();
  switch (spec.mechanism) {
    case Mechanism::kPtr: {
      PtrOutcome o = RunPtr(g, s, cfg.ptr, rng);
      out.status = o.status;
      out.v = std::move(o.v_ptr);
      break;
    }
    case Mechanism::kPpm:
      out.v = RunPpm(g, cfg.ppm, rng).v;
      break;
    case Mechanism::kNonPrivate:
      out.v = s.v;
      break;
    case Mechanism::kGaussGlobal: {
      const double gs = kEigenvectorGlobalSensitivity;
      const double sigma =
          std::sqrt(2.0 * gs * gs * std::log(2.0 / cfg.delta)) / spec.eps;
      out.v = s.v;
      for (Eigen::Index i = 0; i < out.v.size(); ++i) {
        out.v[i] += SampleGaussian(sigma, rng);
      }
      const double norm = out.v.norm();
      if (norm > 0.0) out.v /= norm;
      break;
    }
  }
  out.time_ms = ElapsedMs(start);
  return out;
}

const std::vector<std::string>& ConfigColumns() {
  static const std::vector<std::string> kColumns = {
      "eps0", "eps1", "eps2", "eps", "delta", "p", "mu", "iters", "seed"};
  return kColumns;
}

std::vector<std::string> ConfigValues(const RunReport& r) {
  const ResolvedConfig& c = r.config;
  return {FormatDouble(c.ptr.eps0), FormatDouble(c.ptr.eps1),
          FormatDouble(c.ptr.eps2), FormatDouble(c.ppm.eps),
          FormatDouble(c.delta),    FormatDouble(c.ptr.p),
          FormatDouble(c.ptr.mu),   std::to_string(c.ppm.iterations),
          std::to_string(r.spec.seed)};
}

}  // namespace

std::string_view MechanismName(Mechanism m) {
  switch (m) {
    case Mechanism::kPtr:
      return "ptr";
    case Mechanism::kPpm:
      return "ppm";
    case Mechanism::kNonPrivate:
      return "nonprivate";
    case Mechanism::kGaussGlobal:
      return "gauss_global";
  }
  return "?";
}

Mechanism ParseMechanism(std::string_view name) {
  for (Mechanism m : {Mechanism::kPtr, Mechanism::kPpm, Mechanism::kNonPrivate,
                      Mechanism::kGaussGlobal}) {
    if (MechanismName(m) == name) return m;
  }
  throw ConfigError("unknown mechanism '" + std::string(name) + "'");
}

std::vector<int> ParseKGrid(std::string_view text) {
  std::vector<int> ks;
  if (text.find(':') != std::string_view::npos) {
    const auto parts = Split(text, ':');
    if (parts.size() != 3) throw ConfigError("k grid range is start:stop:step");
    const int start = ParseNumber<int>(parts[0], "k grid start");
    const int stop = ParseNumber<int>(parts[1], "k grid stop");
    const int step = ParseNumber<int>(parts[2], "k grid step");
    if (step <= 0) throw ConfigError("k grid step must be positive");
    for (int k = start; k <= stop; k += step) ks.push_back(k);
  } else {
    for (std::string_view item : Split(text, ',')) {
      ks.push_back(ParseNumber<int>(item, "k"));
    }
  }
  if (ks.empty()) throw ConfigError("k grid is empty");
  return ks;
}

Graph MakeSynthetic(std::string_view text) {
  const std::size_t colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  Params params(colon == std::string_view::npos ? std::string_view()
                                                : text.substr(colon + 1));
  Graph g;
  if (name == "complete") {
    g = CompleteGraph(params.Get<VertexId>("n"));
  } else if (name == "star") {
    g = StarGraph(params.Get<VertexId>("leaves"));
  } else if (name == "path") {
    g = PathGraph(params.Get<VertexId>("n"));
  } else if (name == "er") {
    const auto n = params.Get<VertexId>("n");
    double p = 0.0;
    if (params.has("avg_deg")) {
      if (n < 2) throw ConfigError("er needs n >= 2");
      p = params.Get<double>("avg_deg") / (n - 1);
    } else {
      p = params.Get<double>("p");
    }
    g = ErdosRenyi(n, p, params.Get<std::uint64_t>("seed", 1));
  } else if (name == "planted_clique") {
    const auto n = params.Get<VertexId>("n");
    const auto p = params.Get<double>("p");
    const auto k = params.Get<VertexId>("k");
    g = PlantClique(n, p, k, params.Get<std::uint64_t>("seed", 1)).graph;
  } else if (name == "regular") {
    const auto n = params.Get<VertexId>("n");
    const auto d = params.Get<VertexId>("d");
    g = RandomRegular(n, d, params.Get<std::uint64_t>("seed", 1));
  } else {
    throw ConfigError("unknown synthetic graph '" + std::string(name) + "'");
  }
  params.CheckAllUsed();
  return g;
}

void ExperimentSpec::Validate() const {
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (threads < 1) throw ConfigError("threads must be >= 1");
  if (!(eps > 0.0)) throw ConfigError("eps must be positive");
  if (iterations < 0) throw ConfigError("iters must be >= 1 or auto");
}

ResolvedConfig ResolveConfig(const ExperimentSpec& spec, const Graph& g,
                             const SpectralSummary& s) {
  spec.Validate();
  ResolvedConfig c;
  c.delta = spec.delta ? *spec.delta : DefaultDelta(g.num_edges());
  c.ptr.eps0 = spec.eps0;
  c.ptr.eps1 = spec.eps1;
  c.ptr.eps2 = spec.eps2;
  c.ptr.delta = c.delta;
  c.ptr.p = spec.p ? *spec.p : DefaultSuccessKnob(c.delta);
  c.ptr.mu = spec.mu;
  c.ptr.Validate();
  c.ppm.eps = spec.eps;
  c.ppm.delta = c.delta;
  c.ppm.iterations = spec.iterations;
  if (spec.mechanism == Mechanism::kPpm && c.ppm.iterations == 0) {
    c.ppm.iterations = AutoIterations(s.lambda1, s.gap, g.num_vertices());
  }
  c.ppm.Validate();

  switch (spec.mechanism) {
    case Mechanism::kPtr:
      c.eps_total = c.ptr.eps0 + c.ptr.eps1 + c.ptr.eps2;
      c.delta_total = TblDelta0(c.ptr.mu, c.ptr.eps0) + c.delta;
      break;
    case Mechanism::kPpm:
    case Mechanism::kGaussGlobal:
      c.eps_total = spec.eps;
      c.delta_total = c.delta;
      break;
    case Mechanism::kNonPrivate:
      c.eps_total = std::numeric_limits<double>::infinity();
      c.delta_total = 0.0;
      break;
  }
  return c;
}

SpectralSummary ComputeSummary(const Graph& g, std::uint64_t seed,
                               int attempts) {
  EigenSolverOptions opts;
  SpectralSummary s;
  for (int a = 0; a < attempts; ++a) {
    opts.seed = seed + static_cast<std::uint64_t>(a);
    s = TopTwoEigenpairs(g, opts);
    if (s.converged) return s;
  }
  throw NumericalError("eigensolver did not converge (residual " +
                       FormatDouble(std::max(s.residual, s.residual2)) + ")");
}

StatsReport ComputeStats(const Graph& g, const SpectralSummary& s,
                         const ExperimentSpec& spec) {
  StatsReport r;
  r.n = g.num_vertices();
  r.m = g.num_edges();
  r.components = Components(g);
  r.lambda1 = s.lambda1;
  r.lambda2 = s.lambda2;
  r.gap = s.gap;
  r.c_pi = s.c_pi;
  r.ls_bound = LocalSensitivityBound(s);
  if (r.ls_bound) r.gs_ls_ratio = kEigenvectorGlobalSensitivity / *r.ls_bound;
  r.smooth_eps = spec.eps0 + spec.eps1 + spec.eps2;
  r.smooth_delta = spec.delta ? *spec.delta : DefaultDelta(r.m);
  r.smooth_bound = SmoothSensitivityBound(s, r.n, r.smooth_eps, r.smooth_delta);
  return r;
}

nlohmann::ordered_json StatsToJson(const StatsReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["components"] = r.components.count;
  j["largest_component"] = r.components.largest;
  j["isolated"] = r.components.isolated;
  j["lambda1"] = r.lambda1;
  j["lambda2"] = r.lambda2;
  j["gap"] = r.gap;
  j["c_pi"] = r.c_pi;
  j["ls_bound"] = r.ls_bound ? nlohmann::json(*r.ls_bound)
                             : nlohmann::json("inapplicable");
  j["gs_ls_ratio"] = OptionalJson(r.gs_ls_ratio);
  j["smooth_bound"] = r.smooth_bound ? nlohmann::json(*r.smooth_bound)
                                     : nlohmann::json("inapplicable");
  j["smooth_eps"] = r.smooth_eps;
  j["smooth_delta"] = r.smooth_delta;
  j["nonprivate"] = true;
  return j;
}

RunReport RunExperiment(const Graph& g, const SpectralSummary& s,
                        const ExperimentSpec& spec) {
  spec.Validate();
  if (spec.k_grid.empty()) throw ConfigError("k grid is empty");
  for (int k : spec.k_grid) {
    if (k < 2 || k > g.num_vertices()) {
      throw ConfigError("k = " + std::to_string(k) + " outside [2, n]");
    }
  }
  RunReport report;
  report.spec = spec;
  report.config = ResolveConfig(spec, g, s);
  const ResolvedConfig& cfg = report.config;

  std::vector<VertexSubset> reference;
  reference.reserve(spec.k_grid.size());
  for (int k : spec.k_grid) reference.push_back(TopKAbsSubset(s.v, k).subset);

  std::vector<std::vector<TrialRow>> per_trial(
      static_cast<std::size_t>(spec.trials));
  ParallelTrials(spec.trials, spec.threads, [&](int t) {
    RngStream rng(spec.seed, static_cast<std::uint64_t>(t));
    MechanismDraw draw = Draw(g, s, spec, cfg, rng);
    auto& rows = per_trial[static_cast<std::size_t>(t)];
    for (std::size_t i = 0; i < spec.k_grid.size(); ++i) {
      TrialRow row;
      row.graph = spec.graph_name;
      row.mechanism = spec.mechanism;
      row.k = spec.k_grid[i];
      row.trial = t;
      row.status = std::string(PtrStatusName(draw.status));
      row.eps_total = cfg.eps_total;
      row.delta_total = cfg.delta_total;
      if (spec.record_time) row.time_ms = draw.time_ms;
      if (draw.status == PtrStatus::kReleased) {
        const SubsetResult sub = DksExtract(g, draw.v, row.k);
        row.density = sub.density;
        row.jaccard = Jaccard(sub.subset, reference[i]);
      }
      rows.push_back(std::move(row));
    }
  });

  for (auto& rows : per_trial) {
    for (auto& row : rows) report.rows.push_back(std::move(row));
  }
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const TrialRow& a, const TrialRow& b) {
                     return std::tie(a.k, a.trial) < std::tie(b.k, b.trial);
                   });
  report.aggregates = Aggregate(report.rows, s, g);
  return report;
}

std::vector<KAggregate> Aggregate(const std::vector<TrialRow>& rows,
                                  const SpectralSummary& s, const Graph& g) {
  std::map<int, std::vector<const TrialRow*>> by_k;
  for (const TrialRow& row : rows) by_k[row.k].push_back(&row);

  auto mean_std = [](const std::vector<double>& xs) {
    if (xs.empty()) return std::pair<double, double>(0.0, 0.0);
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    if (xs.size() < 2) return std::pair<double, double>(mean, 0.0);
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return std::pair<double, double>(
        mean, std::sqrt(ss / static_cast<double>(xs.size() - 1)));
  };

  std::vector<KAggregate> out;
  for (const auto& [k, group] : by_k) {
    KAggregate a;
    a.k = k;
    std::vector<double> densities;
    std::vector<double> jaccards;
    for (const TrialRow* row : group) {
      if (row->status == PtrStatusName(PtrStatus::kReleased)) {
        ++a.released;
      } else if (row->status == PtrStatusName(PtrStatus::kNoResponse)) {
        ++a.no_response;
      } else {
        ++a.infeasible;
      }
      if (row->density) densities.push_back(*row->density);
      if (row->jaccard) jaccards.push_back(*row->jaccard);
    }
    std::tie(a.density_mean, a.density_std) = mean_std(densities);
    std::tie(a.jaccard_mean, a.jaccard_std) = mean_std(jaccards);
    a.nonprivate_upper_bound = DksUpperBound(s, g, k);
    out.push_back(a);
  }
  return out;
}

void WriteRowsCsv(const RunReport& report, std::ostream& out) {
  out << "graph,mechanism,k,trial,status,density,jaccard,time_ms,eps_total,"
         "delta_total";
  for (const auto& c : ConfigColumns()) out << ',' << c;
  out << '\n';
  const std::vector<std::string> config = ConfigValues(report);
  for (const TrialRow& r : report.rows) {
    out << r.graph << ',' << MechanismName(r.mechanism) << ',' << r.k << ','
        << r.trial << ',' << r.status << ',' << FormatOptional(r.density)
        << ',' << FormatOptional(r.jaccard) << ',' << FormatOptional(r.time_ms)
        << ',' << FormatDouble(r.eps_total) << ','
        << FormatDouble(r.delta_total);
    for (const auto& v : config) out << ',' << v;
    out << '\n';
  }
}

void WriteAggregatesCsv(const RunReport& report, std::ostream& out) {
  out << "graph,mechanism,k,released,no_response,infeasible,density_mean,"
         "density_std,jaccard_mean,jaccard_std,nonprivate_upper_bound\n";
  for (const KAggregate& a : report.aggregates) {
    out << report.spec.graph_name << ',' << MechanismName(report.spec.mechanism)
        << ',' << a.k << ',' << a.released << ',' << a.no_response << ','
        << a.infeasible << ',' << FormatDouble(a.density_mean) << ','
        << FormatDouble(a.density_std) << ',' << FormatDouble(a.jaccard_mean)
        << ',' << FormatDouble(a.jaccard_std) << ','
        << FormatDouble(a.nonprivate_upper_bound) << '\n';
  }
}

nlohmann::ordered_json RunToJson(const RunReport& report) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json config;
  const std::vector<std::string> values = ConfigValues(report);
  for (std::size_t i = 0; i < values.size(); ++i) {
    config[ConfigColumns()[i]] = values[i];
  }
  j["graph"] = report.spec.graph_name;
  j["mechanism"] = MechanismName(report.spec.mechanism);
  j["config"] = config;
  j["eps_total"] = FormatDouble(report.config.eps_total);
  j["delta_total"] = report.config.delta_total;
  auto& rows = j["rows"] = nlohmann::ordered_json::array();
  for (const TrialRow& r : report.rows) {
    rows.push_back({{"k", r.k},
                    {"trial", r.trial},
                    {"status", r.status},
                    {"density", OptionalJson(r.density)},
                    {"jaccard", OptionalJson(r.jaccard)},
                    {"time_ms", OptionalJson(r.time_ms)}});
  }
  auto& aggs = j["aggregates"] = nlohmann::ordered_json::array();
  for (const KAggregate& a : report.aggregates) {
    aggs.push_back({{"k", a.k},
                    {"released", a.released},
                    {"no_response", a.no_response},
                    {"infeasible", a.infeasible},
                    {"density_mean", a.density_mean},
                    {"density_std", a.density_std},
                    {"jaccard_mean", a.jaccard_mean},
                    {"jaccard_std", a.jaccard_std},
                    {"nonprivate_upper_bound", a.nonprivate_upper_bound}});
  }
  return j;
}

BenchReport RunBench(const Graph& g, const SpectralSummary& s,
                     const ExperimentSpec& spec) {
  ExperimentSpec ppm_spec = spec;
  ppm_spec.mechanism = Mechanism::kPpm;
  const ResolvedConfig cfg = ResolveConfig(ppm_spec, g, s);

  BenchReport r;
  r.trials = spec.trials;
  r.ppm_iterations = cfg.ppm.iterations;
  std::vector<double> ptr_ms;
  std::vector<double> ppm_ms;
  // Sequential on purpose: concurrent trials would distort wall times.
  for (int t = 0; t < spec.trials; ++t) {
    RngStream rng(spec.seed, static_cast<std::uint64_t>(t));
    auto start = Clock::now();
    const PtrOutcome o = RunPtr(g, s, cfg.ptr, rng);
    ptr_ms.push_back(ElapsedMs(start));
    if (o.released()) ++r.ptr_released;
    start = Clock::now();
    RunPpm(g, cfg.ppm, rng);
    ppm_ms.push_back(ElapsedMs(start));
  }
  r.ptr_median_ms = Median(ptr_ms);
  r.ppm_median_ms = Median(ppm_ms);
  r.speedup = r.ptr_median_ms > 0.0 ? r.ppm_median_ms / r.ptr_median_ms
                                    : std::numeric_limits<double>::infinity();
  return r;
}

nlohmann::ordered_json BenchToJson(const BenchReport& r) {
  return {{"trials", r.trials},
          {"ppm_iterations", r.ppm_iterations},
          {"ptr_median_ms", r.ptr_median_ms},
          {"ppm_median_ms", r.ppm_median_ms},
          {"speedup", r.speedup},
          {"ptr_released", r.ptr_released}};
}

SuccessReport RunSuccessRate(const Graph& g, const SpectralSummary& s,
                             const ExperimentSpec& spec) {
  if (spec.mechanism != Mechanism::kPtr) {
    throw ConfigError("success rates are defined for the ptr mechanism");
  }
  const ResolvedConfig cfg = ResolveConfig(spec, g, s);

  std::vector<PtrStatus> status(static_cast<std::size_t>(spec.trials));
  ParallelTrials(spec.trials, spec.threads, [&](int t) {
    RngStream rng(spec.seed, static_cast<std::uint64_t>(t));
    status[static_cast<std::size_t>(t)] = RunPtr(g, s, cfg.ptr, rng).status;
  });

  SuccessReport r;
  r.trials = spec.trials;
  for (PtrStatus st : status) {
    if (st == PtrStatus::kReleased) ++r.released;
    if (st == PtrStatus::kNoResponse) ++r.no_response;
    if (st == PtrStatus::kInfeasible) ++r.infeasible;
  }
  const double n = r.trials;
  r.rate = r.released / n;
  r.std_error = std::sqrt(r.rate * (1.0 - r.rate) / n);
  const double z = 1.959963984540054;
  const double denom = 1.0 + z * z / n;
  const double centre = (r.rate + z * z / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(r.rate * (1.0 - r.rate) / n + z * z / (4.0 * n * n)) /
      denom;
  r.ci_low = std::max(0.0, centre - half);
  r.ci_high = std::min(1.0, centre + half);
  r.lower_bound = SuccessProbabilityLowerBound(cfg.ptr.delta, cfg.ptr.p);
  return r;
}

nlohmann::ordered_json SuccessToJson(const SuccessReport& r) {
  return {{"trials", r.trials},         {"released", r.released},
          {"no_response", r.no_response}, {"infeasible", r.infeasible},
          {"rate", r.rate},             {"std_error", r.std_error},
          {"ci_low", r.ci_low},         {"ci_high", r.ci_high},
          {"lower_bound", r.lower_bound}};
}

nlohmann::ordered_json OutcomeToJson(const PtrOutcome& outcome,
                                     const ResolvedConfig& config,
                                     bool debug_unsafe) {
  nlohmann::ordered_json j;
  // Infeasibility depends on the private gap, so release mode reports it as
  // a plain refusal.
  j["status"] = outcome.status == PtrStatus::kInfeasible && !debug_unsafe
                    ? PtrStatusName(PtrStatus::kNoResponse)
                    : PtrStatusName(outcome.status);
  j["v_ptr"] = outcome.released()
                   ? nlohmann::json(std::vector<double>(
                         outcome.v_ptr.data(),
                         outcome.v_ptr.data() + outcome.v_ptr.size()))
                   : nlohmann::json(nullptr);
  j["config"] = {{"eps0", config.ptr.eps0},   {"eps1", config.ptr.eps1},
                 {"eps2", config.ptr.eps2},   {"delta", config.ptr.delta},
                 {"p", config.ptr.p},         {"mu", config.ptr.mu},
                 {"eps_total", config.eps_total},
                 {"delta_total", config.delta_total}};
  if (debug_unsafe) {
    const PtrDiagnostics& d = outcome.diagnostics;
    j["debug_unsafe"] = {
        {"warning", "contains non-private values"},
        {"gap_noise", d.gap_noise.value},
        {"phi_noise", d.phi_noise.value},
        {"f_tilde", d.f_tilde},
        {"gap_test_passed", d.gap_test_passed},
        {"gs_phi", d.gs_phi},
        {"beta", d.beta},
        {"beta_l", d.beta_l},
        {"beta_u", d.beta_u},
        {"phi", d.phi},
        {"phi_hat", d.phi_hat},
        {"threshold", d.threshold},
        {"sigma_release", d.sigma_release},
        {"delta0", d.delta0},
        {"success_lb", d.success_lb}};
  }
  return j;
}

}  // namespace privpc
