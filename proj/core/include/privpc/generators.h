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

#ifndef PRIVPC_GENERATORS_H_
#define PRIVPC_GENERATORS_H_

#include <cstdint>

#include "privpc/graph.h"

namespace privpc {

Graph CompleteGraph(VertexId n);

// K_{1,leaves}; vertex 0 is the centre.
Graph StarGraph(VertexId leaves);

Graph PathGraph(VertexId n);

// G(n, p) by geometric edge skipping, O(n + m).
Graph ErdosRenyi(VertexId n, double p, std::uint64_t seed);

struct PlantedClique {
  Graph graph;
  VertexSubset clique;
};

// G(n, p) with every pair inside a seeded random k-subset joined.
PlantedClique PlantClique(VertexId n, double p, VertexId k, std::uint64_t seed);

// Uniform-ish random simple d-regular graph: configuration model pairing
// followed by degree-preserving switches that remove loops and multi-edges.
Graph RandomRegular(VertexId n, VertexId d, std::uint64_t seed);

}  // namespace privpc

#endif  // PRIVPC_GENERATORS_H_
