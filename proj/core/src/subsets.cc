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

#include "privpc/subsets.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "privpc/errors.h"

namespace privpc {

std::string_view CandidateName(Candidate c) {
  return c == Candidate::kTopK ? "top_k" : "bottom_k";
}

SubsetResult TopKAbsSubset(const Eigen::VectorXd& v, int k) {
  const auto n = static_cast<int>(v.size());
  if (k < 2 || k > n) throw ConfigError("k must satisfy 2 <= k <= n");

  std::vector<VertexId> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<VertexId> top = idx;
  std::partial_sort(top.begin(), top.begin() + k, top.end(),
                    [&v](VertexId a, VertexId b) {
                      return v[a] > v[b] || (v[a] == v[b] && a < b);
                    });
  std::vector<VertexId> bottom = std::move(idx);
  std::partial_sort(bottom.begin(), bottom.begin() + k, bottom.end(),
                    [&v](VertexId a, VertexId b) {
                      return v[a] < v[b] || (v[a] == v[b] && a < b);
                    });
  top.resize(static_cast<std::size_t>(k));
  bottom.resize(static_cast<std::size_t>(k));

  double top_sum = 0.0;
  double bottom_sum = 0.0;
  for (VertexId i : top) top_sum += v[i];
  for (VertexId i : bottom) bottom_sum += v[i];

  SubsetResult out;
  if (std::abs(bottom_sum) > std::abs(top_sum)) {
    out.subset = VertexSubset(std::move(bottom));
    out.objective = std::abs(bottom_sum);
    out.candidate = Candidate::kBottomK;
  } else {
    out.subset = VertexSubset(std::move(top));
    out.objective = std::abs(top_sum);
    out.candidate = Candidate::kTopK;
  }
  return out;
}

SubsetResult DksExtract(const Graph& g, const Eigen::VectorXd& v, int k) {
  if (v.size() != g.num_vertices()) {
    throw ConfigError("vector length does not match graph");
  }
  SubsetResult out = TopKAbsSubset(v, k);
  out.density = EdgeDensity(g, out.subset);
  return out;
}

double DksUpperBound(const SpectralSummary& s, const Graph& g, int k) {
  if (k < 2 || k > g.num_vertices()) {
    throw ConfigError("k must satisfy 2 <= k <= n");
  }
  const SubsetResult x = TopKAbsSubset(s.v, k);
  double sum = 0.0;
  for (VertexId i : x.subset.members()) sum += s.v[i];
  const double kk = static_cast<double>(k);
  const double rank_one =
      s.lambda1 * sum * sum / (kk * (kk - 1.0)) + std::abs(s.lambda2) / (kk - 1.0);
  const double spectral = std::abs(s.lambda1) / (kk - 1.0);
  return std::min({rank_one, spectral, 1.0});
}

double Jaccard(const VertexSubset& a, const VertexSubset& b) {
  if (a.empty() && b.empty()) return 1.0;
  std::vector<VertexId> common;
  std::set_intersection(a.members().begin(), a.members().end(),
                        b.members().begin(), b.members().end(),
                        std::back_inserter(common));
  const double inter = static_cast<double>(common.size());
  return inter / (static_cast<double>(a.size() + b.size()) - inter);
}

}  // namespace privpc
