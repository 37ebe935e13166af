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

#include "privpc/generators.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>
#include <vector>

#include "privpc/errors.h"
#include "privpc/noise.h"

namespace privpc {

namespace {

using Edge = std::pair<VertexId, VertexId>;

template <typename T>
void Shuffle(std::vector<T>& items, RngStream& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[rng.UniformInt(i)]);
  }
}

Edge Ordered(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

}  // namespace

Graph CompleteGraph(VertexId n) {
  if (n < 1) throw ConfigError("complete graph needs n >= 1");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::FromEdges(n, edges);
}

Graph StarGraph(VertexId leaves) {
  if (leaves < 1) throw ConfigError("star needs at least one leaf");
  std::vector<Edge> edges;
  for (VertexId v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::FromEdges(leaves + 1, edges);
}

Graph PathGraph(VertexId n) {
  if (n < 2) throw ConfigError("path needs n >= 2");
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::FromEdges(n, edges);
}

Graph ErdosRenyi(VertexId n, double p, std::uint64_t seed) {
  if (n < 1) throw ConfigError("G(n, p) needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("G(n, p) needs p in [0, 1]");
  std::vector<Edge> edges;
  if (p == 0.0) return Graph::FromEdges(n, edges);
  RngStream rng(seed, 0);
  edges.reserve(static_cast<std::size_t>(p * 0.5 * n * (n - 1.0) * 1.05) + 16);
  if (p == 1.0) return CompleteGraph(n);

  // Batagelj & Brandes: walk the lower triangle row by row, jumping ahead by
  // geometric gaps.
  const double log_q = std::log1p(-p);
  std::int64_t v = 1;
  std::int64_t w = -1;
  while (v < n) {
    w += 1 + static_cast<std::int64_t>(std::floor(std::log(rng.Uniform()) / log_q));
    while (w >= v && v < n) {
      w -= v;
      ++v;
    }
    if (v < n) {
      edges.emplace_back(static_cast<VertexId>(w), static_cast<VertexId>(v));
    }
  }
  return Graph::FromEdges(n, edges);
}

PlantedClique PlantClique(VertexId n, double p, VertexId k,
                          std::uint64_t seed) {
  if (k < 2 || k > n) throw ConfigError("planted clique needs 2 <= k <= n");
  Graph background = ErdosRenyi(n, p, seed);
  RngStream rng(seed, 1);
  std::vector<VertexId> order(static_cast<std::size_t>(n));
  for (VertexId i = 0; i < n; ++i) order[i] = i;
  Shuffle(order, rng);
  order.resize(static_cast<std::size_t>(k));

  std::vector<Edge> edges = background.Edges();
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      edges.push_back(Ordered(order[a], order[b]));
    }
  }
  return {Graph::FromEdges(n, edges), VertexSubset(std::move(order))};
}

Graph RandomRegular(VertexId n, VertexId d, std::uint64_t seed) {
  if (n < 1 || d < 0 || d >= n) throw ConfigError("regular graph needs 0 <= d < n");
  if ((static_cast<std::int64_t>(n) * d) % 2 != 0) {
    throw ConfigError("regular graph needs n * d even");
  }
  RngStream rng(seed, 0);
  std::vector<VertexId> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * d);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId j = 0; j < d; ++j) stubs.push_back(v);
  }
  Shuffle(stubs, rng);

  const std::size_t m = stubs.size() / 2;
  std::vector<Edge> edges(m);
  std::multiset<Edge> present;
  for (std::size_t i = 0; i < m; ++i) {
    edges[i] = Ordered(stubs[2 * i], stubs[2 * i + 1]);
    present.insert(edges[i]);
  }
  auto bad = [&present](const Edge& e) {
    return e.first == e.second || present.count(e) > 1;
  };

  // Repair loops and parallel edges with random double-edge switches
  // (a,b),(c,d) -> (a,c),(b,d), accepted only when they create no new defect.
  std::size_t guard = 0;
  const std::size_t max_attempts = 200 * m + 1000;
  for (bool dirty = true; dirty;) {
    dirty = false;
    for (std::size_t i = 0; i < m; ++i) {
      while (bad(edges[i])) {
        dirty = true;
        if (++guard > max_attempts) {
          throw NumericalError("random regular: switch repair did not finish");
        }
        const std::size_t j = rng.UniformInt(m);
        if (j == i) continue;
        auto [a, b] = edges[i];
        auto [c, dd] = edges[j];
        if (rng.UniformInt(2) == 1) std::swap(c, dd);
        const Edge e1 = Ordered(a, c);
        const Edge e2 = Ordered(b, dd);
        if (e1.first == e1.second || e2.first == e2.second || e1 == e2 ||
            present.count(e1) > 0 || present.count(e2) > 0) {
          continue;
        }
        present.erase(present.find(edges[i]));
        present.erase(present.find(edges[j]));
        edges[i] = e1;
        edges[j] = e2;
        present.insert(e1);
        present.insert(e2);
      }
    }
  }
  return Graph::FromEdges(n, edges);
}

}  // namespace privpc
