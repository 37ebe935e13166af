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

#include "privpc/graph.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "privpc/errors.h"

namespace privpc {

VertexSubset::VertexSubset(std::vector<VertexId> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool VertexSubset::contains(VertexId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Graph Graph::FromEdges(VertexId n,
                       std::span<const std::pair<VertexId, VertexId>> edges) {
  if (n < 0) throw ConfigError("vertex count must be non-negative");
  Graph g;
  g.n_ = n;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ConfigError("edge endpoint out of range");
    }
    if (u == v) throw ConfigError("self-loop on vertex " + std::to_string(u));
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (VertexId i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];

  g.targets_.resize(static_cast<std::size_t>(g.offsets_[n]));
  std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.targets_[cursor[u]++] = v;
    g.targets_[cursor[v]++] = u;
  }

  // Sort and de-duplicate each list, then compact in place.
  std::int64_t write = 0;
  std::int64_t begin = 0;
  for (VertexId i = 0; i < n; ++i) {
    const std::int64_t end = g.offsets_[i + 1];
    auto first = g.targets_.begin() + begin;
    auto last = g.targets_.begin() + end;
    std::sort(first, last);
    last = std::unique(first, last);
    g.offsets_[i] = write;
    for (auto it = first; it != last; ++it) g.targets_[write++] = *it;
    begin = end;
  }
  g.offsets_[n] = write;
  g.targets_.resize(static_cast<std::size_t>(write));
  g.targets_.shrink_to_fit();
  g.m_ = write / 2;
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

void Graph::Multiply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const {
  y.resize(n_);
  const VertexId* t = targets_.data();
  for (VertexId i = 0; i < n_; ++i) {
    double acc = 0.0;
    for (std::int64_t e = offsets_[i]; e < offsets_[i + 1]; ++e) acc += x[t[e]];
    y[i] = acc;
  }
}

void Graph::set_labels(std::vector<std::int64_t> labels) {
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(n_)) {
    throw ConfigError("label count does not match vertex count");
  }
  labels_ = std::move(labels);
}

std::vector<std::pair<VertexId, VertexId>> Graph::Edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (VertexId u = 0; u < n_; ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::Validate() const {
  if (offsets_.size() != static_cast<std::size_t>(n_) + 1 ||
      offsets_.front() != 0 ||
      offsets_.back() != static_cast<std::int64_t>(targets_.size())) {
    throw std::logic_error("graph: malformed offsets");
  }
  if (static_cast<std::int64_t>(targets_.size()) != 2 * m_) {
    throw std::logic_error("graph: adjacency size != 2m");
  }
  for (VertexId u = 0; u < n_; ++u) {
    auto nb = neighbors(u);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      const VertexId v = nb[k];
      if (v < 0 || v >= n_) throw std::logic_error("graph: target out of range");
      if (v == u) throw std::logic_error("graph: self-loop");
      if (k > 0 && nb[k - 1] >= v) {
        throw std::logic_error("graph: unsorted or duplicate neighbours");
      }
      if (!has_edge(v, u)) throw std::logic_error("graph: asymmetric edge");
    }
  }
}

namespace {

bool ParseId(std::string_view token, std::int64_t& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

// Splits off the next whitespace-delimited token.
std::string_view NextToken(std::string_view& rest) {
  std::size_t b = 0;
  while (b < rest.size() && std::isspace(static_cast<unsigned char>(rest[b]))) {
    ++b;
  }
  std::size_t e = b;
  while (e < rest.size() && !std::isspace(static_cast<unsigned char>(rest[e]))) {
    ++e;
  }
  std::string_view token = rest.substr(b, e - b);
  rest.remove_prefix(e);
  return token;
}

}  // namespace

Graph LoadEdgeList(std::istream& in, const EdgeListOptions& options) {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest(line);
    std::string_view a = NextToken(rest);
    if (a.empty() || a.front() == '#' || a.front() == '%') continue;
    std::string_view b = NextToken(rest);
    std::int64_t u = 0;
    std::int64_t v = 0;
    if (b.empty() || !ParseId(a, u) || !ParseId(b, v)) {
      throw LoadError("expected two integer vertex ids", line_no);
    }
    const std::int64_t min_id = options.one_indexed ? 1 : 0;
    if (u < min_id || v < min_id) {
      throw LoadError("vertex id below " + std::to_string(min_id), line_no);
    }
    if (u == v) {
      if (options.drop_self_loops) continue;
      throw LoadError("self-loop on vertex " + std::to_string(u), line_no);
    }
    raw.emplace_back(u, v);
  }
  if (in.bad()) throw LoadError("read failure");
  if (raw.empty()) throw LoadError("graph has no edges");

  std::vector<std::int64_t> labels;
  labels.reserve(raw.size() * 2);
  for (const auto& [u, v] : raw) {
    labels.push_back(u);
    labels.push_back(v);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.size() > static_cast<std::size_t>(INT32_MAX)) {
    throw LoadError("too many vertices");
  }
  auto index_of = [&labels](std::int64_t label) {
    return static_cast<VertexId>(
        std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
  };
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(raw.size());
  for (const auto& [u, v] : raw) edges.emplace_back(index_of(u), index_of(v));
  raw.clear();
  raw.shrink_to_fit();

  Graph g = Graph::FromEdges(static_cast<VertexId>(labels.size()), edges);
  g.set_labels(std::move(labels));
  return g;
}

void WriteEdgeList(const Graph& g, std::ostream& out) {
  for (const auto& [u, v] : g.Edges()) {
    out << g.label(u) << ' ' << g.label(v) << '\n';
  }
}

std::int64_t InducedEdgeCount(const Graph& g, const VertexSubset& s) {
  std::int64_t count = 0;
  auto members = s.members();
  for (VertexId u : members) {
    if (u < 0 || u >= g.num_vertices()) {
      throw ConfigError("subset vertex out of range");
    }
  }
  for (VertexId u : members) {
    // Count each edge once, from its smaller endpoint; probe whichever of the
    // two sorted lists is shorter.
    auto nb = g.neighbors(u);
    if (nb.size() <= members.size()) {
      for (VertexId v : nb) {
        if (v > u && s.contains(v)) ++count;
      }
    } else {
      for (VertexId v : members) {
        if (v > u && g.has_edge(u, v)) ++count;
      }
    }
  }
  return count;
}

double EdgeDensity(const Graph& g, const VertexSubset& s) {
  const auto k = static_cast<std::int64_t>(s.size());
  if (k < 2) throw ConfigError("edge density needs a subset of size >= 2");
  const double pairs = 0.5 * static_cast<double>(k) * static_cast<double>(k - 1);
  return static_cast<double>(InducedEdgeCount(g, s)) / pairs;
}

ComponentSummary Components(const Graph& g) {
  const VertexId n = g.num_vertices();
  ComponentSummary out;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++out.count;
    if (g.degree(s) == 0) ++out.isolated;
    VertexId size = 0;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      ++size;
      for (VertexId v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    out.largest = std::max(out.largest, size);
  }
  return out;
}

}  // namespace privpc
