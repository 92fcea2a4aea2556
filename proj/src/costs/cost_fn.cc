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

#include "costshare/costs/cost_fn.h"

#include <algorithm>
#include <utility>

#include "costshare/core/error.h"

namespace costshare {
namespace {

void CheckOracleSize(int players) {
  if (players < 1 || players > kMaxOraclePlayers) {
    throw SizeLimitError("combinatorial cost over " + std::to_string(players) +
                             " players",
                         kMaxOraclePlayers);
  }
}

}  // namespace

int SetCoverCost::MaxSetSize() const {
  int best = 0;
  for (PlayerSet s : family) best = std::max(best, s.size());
  return best;
}

CostFn::CostFn(Rep rep, int num_players, SetFunction function, std::string name)
    : rep_(std::move(rep)),
      num_players_(num_players),
      function_(std::move(function)),
      name_(std::move(name)) {}

CostFn CostFn::Table(SetFunction table, std::string name) {
  if (table.role() != SetFunctionRole::kCost) {
    ValidateNormalized(table, "cost table");
  }
  const int n = table.ground_size();
  return CostFn(TableCost{table}, n, table, std::move(name));
}

CostFn CostFn::SetCover(int num_elements, std::vector<PlayerSet> family) {
  CheckOracleSize(num_elements);
  const PlayerSet universe = PlayerSet::Full(num_elements);
  std::vector<uint32_t> masks;
  for (PlayerSet s : family) {
    if (!s.IsSubsetOf(universe)) {
      throw PreconditionError("set cover family member outside the universe");
    }
    masks.push_back(s.bits());
  }
  auto function = SetFunction::FromOracle(
      num_elements,
      [masks](uint32_t t) {
        auto size = MinSetCover(masks, t);
        if (!size) {
          throw InfeasibleError("set cover family cannot cover " +
                                PlayerSet(t).ToString());
        }
        return Rat(*size);
      },
      SetFunctionRole::kCost);
  return CostFn(SetCoverCost{num_elements, std::move(family)}, num_elements,
                std::move(function), "set-cover");
}

CostFn CostFn::VertexCover(Graph graph) {
  const int n = static_cast<int>(graph.edges.size());
  CheckOracleSize(n);
  MinVertexCover(graph, 0);  // validates the graph
  auto function = SetFunction::FromOracle(
      n, [graph](uint32_t t) { return Rat(MinVertexCover(graph, t)); },
      SetFunctionRole::kCost);
  return CostFn(VertexCoverCost{std::move(graph)}, n, std::move(function),
                "vertex-cover");
}

CostFn CostFn::Matching(Graph graph) {
  const int n = static_cast<int>(graph.edges.size());
  CheckOracleSize(n);
  MaxMatchingExhaustive(graph, 0);  // validates the graph
  const bool bipartite = graph.IsBipartite();
  auto function = SetFunction::FromOracle(
      n,
      [graph, bipartite](uint32_t t) {
        return Rat(bipartite ? MaxBipartiteMatching(graph, t)
                             : MaxMatchingExhaustive(graph, t));
      },
      SetFunctionRole::kCost);
  return CostFn(MatchingCost{std::move(graph)}, n, std::move(function),
                "matching");
}

CostFn CostFn::WithApproximationError(Rat error) const {
  CostFn copy = *this;
  copy.approximation_error_ = error;
  return copy;
}

ClassFlags CheckCostClass(const SetFunction& c) {
  ClassFlags flags = Classify(c);
  if (!flags.subadditive) {
    throw SizeLimitError(
        "subadditivity check over " + std::to_string(c.ground_size()) +
            " players",
        flags.nondecreasing ? kMaxSubadditiveMonotoneGround
                            : kMaxSubadditiveGeneralGround);
  }
  return flags;
}

}  // namespace costshare
