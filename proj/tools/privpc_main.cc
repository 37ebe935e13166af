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

// privpc: edge-private principal component of a graph.
//
//   privpc stats      --graph FILE | --synthetic SPEC
//   privpc run        ... --mechanism ptr --k-grid 10:100:10 --trials 100
//   privpc bench      ... --trials 20
//   privpc mc-success ... --trials 2000
//   privpc release    ... [--debug-unsafe]
//
// Exit codes: 0 success, 1 numerical failure, 2 configuration error,
// 3 graph load error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <nlohmann/json.hpp>

#include "graph_file.h"
#include "privpc/errors.h"
#include "privpc/experiment.h"
#include "privpc/graph.h"
#include "privpc/noise.h"
#include "privpc/ptr.h"
#include "privpc/spectral.h"

namespace {

using privpc::ConfigError;

constexpr int kExitNumerical = 1;
constexpr int kExitConfig = 2;
constexpr int kExitLoad = 3;

struct Flags {
  std::string graph_path;
  std::string synthetic;
  bool one_indexed = false;
  bool drop_self_loops = false;
  std::string mechanism = "ptr";
  std::string k_grid = "10";
  int trials = 1;
  std::uint64_t seed = 0;
  double eps0 = 1.0;
  double eps1 = 3.0;
  double eps2 = 3.0;
  double eps = 3.0;
  std::string delta = "auto";
  std::string p = "auto";
  double mu = 3.0 * privpc::kGapThreshold;
  std::string iters = "auto";
  std::string out;
  std::string summary;
  std::string format = "csv";
  bool debug_unsafe = false;
  bool record_time = false;
  int threads = 1;
};

void AddCommonOptions(CLI::App* cmd, Flags& f) {
  auto* source = cmd->add_option_group("source");
  source->add_option("--graph", f.graph_path, "Edge list file (.gz allowed)");
  source->add_option("--synthetic", f.synthetic,
                     "NAME:key=value,... e.g. planted_clique:n=220,p=0.05,k=20");
  source->require_option(1);
  cmd->add_flag("--one-indexed", f.one_indexed, "Vertex ids start at 1");
  cmd->add_flag("--drop-self-loops", f.drop_self_loops,
                "Skip self-loop lines instead of failing");
  cmd->add_option("--seed", f.seed, "Master seed")->capture_default_str();
  cmd->add_option("--eps0", f.eps0, "Gap-test budget")->capture_default_str();
  cmd->add_option("--eps1", f.eps1, "Distance-test budget")
      ->capture_default_str();
  cmd->add_option("--eps2", f.eps2, "Release budget")->capture_default_str();
  cmd->add_option("--eps", f.eps, "Budget of ppm and gauss_global")
      ->capture_default_str();
  cmd->add_option("--delta", f.delta, "delta or auto (ln m / m)")
      ->capture_default_str();
  cmd->add_option("--p", f.p, "Success knob p or auto")->capture_default_str();
  cmd->add_option("--mu", f.mu, "TBL centre")->capture_default_str();
  cmd->add_option("--iters", f.iters, "PPM iterations or auto")
      ->capture_default_str();
  cmd->add_option("--out", f.out, "Output file (default stdout)");
  cmd->add_option("--format", f.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--threads", f.threads, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

std::optional<double> ParseAuto(const std::string& text, const char* what) {
  if (text == "auto") return std::nullopt;
  try {
    std::size_t used = 0;
    const double x = std::stod(text, &used);
    if (used == text.size()) return x;
  } catch (const std::exception&) {
  }
  throw ConfigError(std::string("invalid ") + what + " '" + text + "'");
}

privpc::ExperimentSpec ToSpec(const Flags& f, const std::string& label) {
  privpc::ExperimentSpec spec;
  spec.graph_name = label;
  spec.mechanism = privpc::ParseMechanism(f.mechanism);
  spec.k_grid = privpc::ParseKGrid(f.k_grid);
  spec.trials = f.trials;
  spec.seed = f.seed;
  spec.eps0 = f.eps0;
  spec.eps1 = f.eps1;
  spec.eps2 = f.eps2;
  spec.eps = f.eps;
  spec.delta = ParseAuto(f.delta, "delta");
  spec.p = ParseAuto(f.p, "p");
  spec.mu = f.mu;
  const auto iters = ParseAuto(f.iters, "iters");
  if (iters) {
    if (*iters < 1 || *iters != static_cast<std::int64_t>(*iters)) {
      throw ConfigError("iters must be a positive integer or auto");
    }
    spec.iterations = static_cast<std::int64_t>(*iters);
  }
  spec.threads = f.threads;
  spec.record_time = f.record_time;
  return spec;
}

void Emit(const Flags& f, const std::string& text) {
  if (f.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(f.out);
  if (!out) throw ConfigError("cannot write " + f.out);
  out << text;
}

std::string JsonText(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

// key,value lines for flat objects.
std::string FlatCsv(const nlohmann::ordered_json& j) {
  std::string s = "key,value\n";
  for (const auto& [key, value] : j.items()) {
    s += key + "," + (value.is_string() ? value.get<std::string>() : value.dump()) +
         "\n";
  }
  return s;
}

std::string Render(const Flags& f, const nlohmann::ordered_json& j) {
  return f.format == "json" ? JsonText(j) : FlatCsv(j);
}

int Run(const std::string& command, const Flags& f) {
  privpc::EdgeListOptions load_opts;
  load_opts.one_indexed = f.one_indexed;
  load_opts.drop_self_loops = f.drop_self_loops;
  privpc::Graph g;
  std::string label;
  if (!f.graph_path.empty()) {
    g = privpc::tools::LoadGraphFile(f.graph_path, load_opts);
    label = privpc::tools::GraphLabel(f.graph_path);
  } else {
    g = privpc::MakeSynthetic(f.synthetic);
    label = f.synthetic;
    for (char& c : label) {
      if (c == ',') c = ';';
    }
  }
  if (g.num_vertices() < 2) throw ConfigError("graph needs at least 2 vertices");

  const privpc::ExperimentSpec spec = ToSpec(f, label);
  const privpc::SpectralSummary s = privpc::ComputeSummary(g, f.seed);

  if (command == "stats") {
    Emit(f, Render(f, privpc::StatsToJson(privpc::ComputeStats(g, s, spec))));
  } else if (command == "run") {
    const privpc::RunReport report = privpc::RunExperiment(g, s, spec);
    if (f.format == "json") {
      Emit(f, JsonText(privpc::RunToJson(report)));
    } else {
      std::ostringstream rows;
      privpc::WriteRowsCsv(report, rows);
      Emit(f, rows.str());
    }
    if (!f.summary.empty()) {
      std::ofstream out(f.summary);
      if (!out) throw ConfigError("cannot write " + f.summary);
      privpc::WriteAggregatesCsv(report, out);
    }
  } else if (command == "bench") {
    Emit(f, Render(f, privpc::BenchToJson(privpc::RunBench(g, s, spec))));
  } else if (command == "mc-success") {
    Emit(f, Render(f, privpc::SuccessToJson(
                          privpc::RunSuccessRate(g, s, spec))));
  } else if (command == "release") {
    privpc::ExperimentSpec one = spec;
    one.mechanism = privpc::Mechanism::kPtr;
    const privpc::ResolvedConfig cfg = privpc::ResolveConfig(one, g, s);
    privpc::RngStream rng(f.seed, 0);
    const privpc::PtrOutcome outcome = privpc::RunPtr(g, s, cfg.ptr, rng);
    Emit(f, JsonText(privpc::OutcomeToJson(outcome, cfg, f.debug_unsafe)));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-private principal component of a graph"};
  app.require_subcommand(1);
  Flags f;

  auto* stats = app.add_subcommand("stats", "Spectral summary and sensitivity");
  AddCommonOptions(stats, f);

  auto* run = app.add_subcommand("run", "Per-trial subset densities");
  AddCommonOptions(run, f);
  for (CLI::App* cmd : {run}) {
    cmd->add_option("--mechanism", f.mechanism,
                    "ptr, ppm, nonprivate or gauss_global")
        ->check(CLI::IsMember({"ptr", "ppm", "nonprivate", "gauss_global"}))
        ->capture_default_str();
    cmd->add_option("--k-grid", f.k_grid, "a,b,c or start:stop:step")
        ->capture_default_str();
    cmd->add_option("--summary", f.summary, "Per-k aggregate CSV");
    cmd->add_flag("--record-time", f.record_time, "Fill the time_ms column");
  }

  auto* bench = app.add_subcommand("bench", "PTR vs PPM privatization time");
  AddCommonOptions(bench, f);

  auto* mc = app.add_subcommand("mc-success", "Empirical PTR release rate");
  AddCommonOptions(mc, f);

  auto* release = app.add_subcommand("release", "One PTR release as JSON");
  AddCommonOptions(release, f);
  release->add_flag("--debug-unsafe", f.debug_unsafe,
                    "Include non-private diagnostics");

  for (CLI::App* cmd : {run, bench, mc}) {
    cmd->add_option("--trials", f.trials, "Number of trials")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return Run(command, f);
  } catch (const privpc::LoadError& e) {
    std::cerr << "load error: " << e.what() << "\n";
    return kExitLoad;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const privpc::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  }
}
