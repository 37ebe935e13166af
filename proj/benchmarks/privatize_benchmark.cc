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

// Microbenchmarks for the privatization paths.
//
// BM_RunPtr and BM_RunPpm time only the privatization step: PTR is handed a
// precomputed summary, PPM runs its full iteration loop. The Arg is the
// average degree on a G(n, p) graph with n = 20000, so the PTR/PPM ratio and
// the per-iteration O(n + m) cost can be read off directly.

#include <cstdint>
#include <map>
#include <memory>
#include <utility>

#include <benchmark/benchmark.h>

#include "privpc/generators.h"
#include "privpc/graph.h"
#include "privpc/noise.h"
#include "privpc/ppm.h"
#include "privpc/ptr.h"
#include "privpc/spectral.h"

namespace privpc {
namespace {

constexpr VertexId kNodes = 20000;

struct Instance {
  Graph graph;
  SpectralSummary summary;
};

const Instance& GetInstance(int avg_degree) {
  static auto* cache = new std::map<int, std::unique_ptr<Instance>>();
  auto& slot = (*cache)[avg_degree];
  if (!slot) {
    slot = std::make_unique<Instance>();
    slot->graph = ErdosRenyi(kNodes, avg_degree / (kNodes - 1.0), 1);
    slot->summary = TopTwoEigenpairs(slot->graph);
  }
  return *slot;
}

void BM_Multiply(benchmark::State& state) {
  const Graph& g = GetInstance(static_cast<int>(state.range(0))).graph;
  Eigen::VectorXd x = Eigen::VectorXd::Ones(g.num_vertices());
  Eigen::VectorXd y;
  for (auto _ : state) {
    g.Multiply(x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.counters["edges"] = static_cast<double>(g.num_edges());
}
BENCHMARK(BM_Multiply)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMicrosecond);

void BM_TopTwoEigenpairs(benchmark::State& state) {
  const Graph& g = GetInstance(static_cast<int>(state.range(0))).graph;
  for (auto _ : state) {
    benchmark::DoNotOptimize(TopTwoEigenpairs(g).gap);
  }
}
BENCHMARK(BM_TopTwoEigenpairs)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_RunPtr(benchmark::State& state) {
  const Instance& inst = GetInstance(static_cast<int>(state.range(0)));
  PtrConfig cfg;
  cfg.delta = DefaultDelta(inst.graph.num_edges());
  cfg.p = DefaultSuccessKnob(cfg.delta);
  std::uint64_t stream = 0;
  std::int64_t released = 0;
  for (auto _ : state) {
    RngStream rng(1, stream++);
    released += RunPtr(inst.graph, inst.summary, cfg, rng).released();
  }
  // Low-degree instances have gap < t and are refused before the Gaussian
  // draw, which is why they run in microseconds.
  state.counters["release_rate"] =
      static_cast<double>(released) / static_cast<double>(stream);
  state.counters["gap"] = inst.summary.gap;
}
BENCHMARK(BM_RunPtr)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMicrosecond);

void BM_RunPpm(benchmark::State& state) {
  const Instance& inst = GetInstance(static_cast<int>(state.range(0)));
  PpmConfig cfg;
  cfg.delta = DefaultDelta(inst.graph.num_edges());
  cfg.iterations = AutoIterations(inst.summary.lambda1, inst.summary.gap,
                                  inst.graph.num_vertices());
  std::uint64_t stream = 0;
  for (auto _ : state) {
    RngStream rng(2, stream++);
    benchmark::DoNotOptimize(RunPpm(inst.graph, cfg, rng).v.data());
  }
  state.counters["L"] = static_cast<double>(cfg.iterations);
}
BENCHMARK(BM_RunPpm)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMicrosecond);

void BM_SampleGaussian(benchmark::State& state) {
  RngStream rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(SampleGaussian(1.0, rng));
}
BENCHMARK(BM_SampleGaussian);

}  // namespace
}  // namespace privpc

BENCHMARK_MAIN();
