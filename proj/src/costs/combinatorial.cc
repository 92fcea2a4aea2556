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

#include "costshare/costs/combinatorial.h"

#include <algorithm>
#include <bit>
#include <functional>

#include "costshare/core/error.h"

namespace costshare {
namespace {

using VertexMask = uint64_t;

void CheckGraph(const Graph& g) {
  if (g.num_vertices < 0 || g.num_vertices > kMaxGraphVertices) {
    throw SizeLimitError("graph has too many vertices", kMaxGraphVertices);
  }
  for (auto [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= g.num_vertices || v >= g.num_vertices ||
        u == v) {
      throw PreconditionError("graph edge (" + std::to_string(u) + "," +
                              std::to_string(v) + ") is invalid");
    }
  }
}

std::vector<std::pair<int, int>> SelectEdges(const Graph& g, uint32_t subset) {
  std::vector<std::pair<int, int>> out;
  for (int e : PlayerSet(subset).Elements()) {
    if (e >= static_cast<int>(g.edges.size())) {
      throw PreconditionError("edge index out of range");
    }
    out.push_back(g.edges[e]);
  }
  return out;
}

}  // namespace

int Graph::MaxDegree() const {
  std::vector<int> degree(num_vertices, 0);
  for (auto [u, v] : edges) {
    ++degree[u];
    ++degree[v];
  }
  return degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
}

bool Graph::IsBipartite() const {
  std::vector<std::vector<int>> adj(num_vertices);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> color(num_vertices, -1);
  for (int s = 0; s < num_vertices; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> stack = {s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u]) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<int> MinSetCover(const std::vector<uint32_t>& family,
                               uint32_t target) {
  if (target == 0) return 0;
  std::vector<uint32_t> sets;
  uint32_t reachable = 0;
  for (uint32_t s : family) {
    s &= target;
    if (s != 0 && std::find(sets.begin(), sets.end(), s) == sets.end()) {
      sets.push_back(s);
      reachable |= s;
    }
  }
  if ((reachable & target) != target) return std::nullopt;
  int max_size = 0;
  for (uint32_t s : sets) max_size = std::max(max_size, std::popcount(s));

  int best = static_cast<int>(sets.size()) + 1;
  std::function<void(uint32_t, int)> search = [&](uint32_t uncovered,
                                                   int used) {
    if (uncovered == 0) {
      best = std::min(best, used);
      return;
    }
    const int lower =
        used + (std::popcount(uncovered) + max_size - 1) / max_size;
    if (lower >= best) return;
    const uint32_t e = uncovered & (~uncovered + 1);
    for (uint32_t s : sets) {
      if (s & e) search(uncovered & ~s, used + 1);
    }
  };
  search(target, 0);
  return best;
}

int MinVertexCover(const Graph& g, uint32_t edge_subset) {
  CheckGraph(g);
  const auto edges = SelectEdges(g, edge_subset);
  int best = static_cast<int>(edges.size());
  std::function<void(VertexMask, int)> search = [&](VertexMask chosen,
                                                    int used) {
    if (used >= best) return;
    for (auto [u, v] : edges) {
      if (((chosen >> u) & 1u) || ((chosen >> v) & 1u)) continue;
      search(chosen | (VertexMask{1} << u), used + 1);
      search(chosen | (VertexMask{1} << v), used + 1);
      return;
    }
    best = used;
  };
  search(0, 0);
  return best;
}

int MaxBipartiteMatching(const Graph& g, uint32_t edge_subset) {
  CheckGraph(g);
  if (!g.IsBipartite()) {
    throw PreconditionError("MaxBipartiteMatching: graph is not bipartite");
  }
  // Two-colour the whole graph so every subgraph shares the bipartition.
  std::vector<int> side(g.num_vertices, -1);
  {
    std::vector<std::vector<int>> adj(g.num_vertices);
    for (auto [u, v] : g.edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (int s = 0; s < g.num_vertices; ++s) {
      if (side[s] != -1) continue;
      side[s] = 0;
      std::vector<int> stack = {s};
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u]) {
          if (side[v] == -1) {
            side[v] = 1 - side[u];
            stack.push_back(v);
          }
        }
      }
    }
  }
  std::vector<std::vector<int>> left_adj(g.num_vertices);
  for (auto [u, v] : SelectEdges(g, edge_subset)) {
    if (side[u] == 0) {
      left_adj[u].push_back(v);
    } else {
      left_adj[v].push_back(u);
    }
  }
  std::vector<int> match_of_right(g.num_vertices, -1);
  std::vector<char> visited;
  std::function<bool(int)> augment = [&](int u) {
    for (int v : left_adj[u]) {
      if (visited[v]) continue;
      visited[v] = 1;
      if (match_of_right[v] == -1 || augment(match_of_right[v])) {
        match_of_right[v] = u;
        return true;
      }
    }
    return false;
  };
  int size = 0;
  for (int u = 0; u < g.num_vertices; ++u) {
    if (side[u] != 0 || left_adj[u].empty()) continue;
    visited.assign(g.num_vertices, 0);
    if (augment(u)) ++size;
  }
  return size;
}

int MaxMatchingExhaustive(const Graph& g, uint32_t edge_subset) {
  CheckGraph(g);
  const auto edges = SelectEdges(g, edge_subset);
  const int count = static_cast<int>(edges.size());
  int best = 0;
  std::function<void(int, VertexMask, int)> search = [&](int index,
                                                         VertexMask used,
                                                         int size) {
    if (size + (count - index) <= best) return;
    if (index == count) {
      best = size;
      return;
    }
    auto [u, v] = edges[index];
    if (!((used >> u) & 1u) && !((used >> v) & 1u)) {
      search(index + 1, used | (VertexMask{1} << u) | (VertexMask{1} << v),
             size + 1);
    }
    search(index + 1, used, size);
  };
  search(0, 0, 0);
  return best;
}

}  // namespace costshare
