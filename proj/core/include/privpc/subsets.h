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

// Post-processing of a (private) eigenvector: top-k eigenscore subsets and
// the rank-one densest-k-subgraph heuristic.

#ifndef PRIVPC_SUBSETS_H_
#define PRIVPC_SUBSETS_H_

#include <optional>
#include <string_view>

#include <Eigen/Core>

#include "privpc/graph.h"
#include "privpc/spectral.h"

namespace privpc {

enum class Candidate { kTopK, kBottomK };

std::string_view CandidateName(Candidate c);

struct SubsetResult {
  VertexSubset subset;
  // |v^T x| of the winning candidate.
  double objective = 0.0;
  Candidate candidate = Candidate::kTopK;
  // Edge density of the subset; set only when a graph was supplied.
  std::optional<double> density;
};

// argmax over |x| = k of |v^T x|: the better of the k largest and the k
// smallest entries. Equal entries are taken in vertex-id order; equal
// objectives go to the k largest. Requires 2 <= k <= n.
SubsetResult TopKAbsSubset(const Eigen::VectorXd& v, int k);

// TopKAbsSubset followed by the induced edge density in g.
SubsetResult DksExtract(const Graph& g, const Eigen::VectorXd& v, int k);

// Non-private upper bound on the densest-k-subgraph density:
//   min{ lambda1 (sum_{i in x} v_i)^2 / (k (k-1)) + |lambda2| / (k-1),
//        |lambda1| / (k-1), 1 }
// with x the top-k selection of the non-private v.
double DksUpperBound(const SpectralSummary& s, const Graph& g, int k);

// |a intersect b| / |a union b|, 1 when both are empty.
double Jaccard(const VertexSubset& a, const VertexSubset& b);

}  // namespace privpc

#endif  // PRIVPC_SUBSETS_H_
