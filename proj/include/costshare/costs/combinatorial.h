// Copyright 2026 The Costshare Authors
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

#ifndef COSTSHARE_COSTS_COMBINATORIAL_H_
#define COSTSHARE_COSTS_COMBINATORIAL_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "costshare/core/subset.h"

namespace costshare {

// Undirected simple graph; edges are indexed in listing order.
struct Graph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;

  int MaxDegree() const;
  bool IsBipartite() const;

  friend bool operator==(const Graph&, const Graph&) = default;
};

// Vertex counts above this would not fit the 64-bit vertex masks used by the
// exact solvers below.
inline constexpr int kMaxGraphVertices = 64;

// Size of a minimum-cardinality subfamily of `family` whose union contains
// `target`. std::nullopt when the family cannot cover the target.
// Exact branch and bound on the lowest uncovered element.
std::optional<int> MinSetCover(const std::vector<uint32_t>& family,
                               uint32_t target);

// Minimum vertex cover of the subgraph formed by the edges whose indices are
// in `edge_subset`. Exact branching on an uncovered edge.
int MinVertexCover(const Graph& g, uint32_t edge_subset);

// Maximum matching in the subgraph formed by `edge_subset`, by augmenting
// paths. Requires a bipartite graph.
int MaxBipartiteMatching(const Graph& g, uint32_t edge_subset);

// Maximum matching by exhaustive search with an edge-count bound; any graph.
int MaxMatchingExhaustive(const Graph& g, uint32_t edge_subset);

}  // namespace costshare

#endif  // COSTSHARE_COSTS_COMBINATORIAL_H_
