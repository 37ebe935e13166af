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

#ifndef PRIVPC_GRAPH_H_
#define PRIVPC_GRAPH_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace privpc {

using VertexId = std::int32_t;

// Sorted set of distinct vertex ids.
class VertexSubset {
 public:
  VertexSubset() = default;
  // Sorts and de-duplicates `members`.
  explicit VertexSubset(std::vector<VertexId> members);

  std::span<const VertexId> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(VertexId v) const;

  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

 private:
  std::vector<VertexId> members_;
};

// Immutable simple undirected graph in CSR form. Every undirected edge is
// stored in both directions and neighbour lists are sorted.
class Graph {
 public:
  Graph() = default;

  // Builds a graph on `n` vertices from an edge list. Duplicate edges (in
  // either orientation) are merged. Self-loops are rejected with ConfigError.
  static Graph FromEdges(VertexId n,
                         std::span<const std::pair<VertexId, VertexId>> edges);

  VertexId num_vertices() const { return n_; }
  std::int64_t num_edges() const { return m_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {targets_.data() + offsets_[v],
            static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }
  std::int64_t degree(VertexId v) const {
    return offsets_[v + 1] - offsets_[v];
  }
  bool has_edge(VertexId u, VertexId v) const;

  // y = A x.
  void Multiply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const;

  // Original input labels of the compacted vertices; identity when the graph
  // was not loaded from a file.
  std::span<const std::int64_t> labels() const { return labels_; }
  std::int64_t label(VertexId v) const {
    return labels_.empty() ? v : labels_[v];
  }
  void set_labels(std::vector<std::int64_t> labels);

  // Each undirected edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<VertexId, VertexId>> Edges() const;

  // Full scan of the CSR invariants (symmetry, no loops, sorted, no
  // duplicates, 2m entries). Throws std::logic_error on violation.
  void Validate() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
  }

 private:
  VertexId n_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::int64_t> offsets_{0};
  std::vector<VertexId> targets_;
  std::vector<std::int64_t> labels_;
};

struct EdgeListOptions {
  // Input ids start at 1, so a 0 id is malformed.
  bool one_indexed = false;
  // Drop "u u" lines instead of failing on them.
  bool drop_self_loops = false;
};

// Parses whitespace-separated edge lines. Lines starting with '#' or '%' and
// blank lines are ignored; tokens after the first two are ignored (weights,
// timestamps). Vertex ids are compacted to [0, n) in increasing label order
// and the original ids are kept as labels.
Graph LoadEdgeList(std::istream& in, const EdgeListOptions& options = {});

// Writes one "u v" line per undirected edge using the graph's labels.
void WriteEdgeList(const Graph& g, std::ostream& out);

// |E_S|: number of edges with both endpoints in `s`.
std::int64_t InducedEdgeCount(const Graph& g, const VertexSubset& s);

// |E_S| / C(|S|, 2). Requires |S| >= 2.
double EdgeDensity(const Graph& g, const VertexSubset& s);

struct ComponentSummary {
  VertexId count = 0;
  VertexId largest = 0;
  VertexId isolated = 0;
};

ComponentSummary Components(const Graph& g);

}  // namespace privpc

#endif  // PRIVPC_GRAPH_H_
