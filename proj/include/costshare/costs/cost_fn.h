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

#ifndef COSTSHARE_COSTS_COST_FN_H_
#define COSTSHARE_COSTS_COST_FN_H_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "costshare/core/rational.h"
#include "costshare/core/set_function.h"
#include "costshare/core/subset.h"
#include "costshare/costs/combinatorial.h"

namespace costshare {

// Explicit cost table over player subsets.
struct TableCost {
  SetFunction table;
};

// Players are the elements of the universe; c(S) is the minimum number of
// family members whose union contains S.
struct SetCoverCost {
  int num_elements = 0;
  std::vector<PlayerSet> family;

  int MaxSetSize() const;
};

// Players are edges; c(S) is a minimum vertex cover of the edges in S.
struct VertexCoverCost {
  Graph graph;
};

// Players are edges; c(S) is a maximum matching among the edges in S.
struct MatchingCost {
  Graph graph;
};

// Combinatorial oracles are limited to this many players.
inline constexpr int kMaxOraclePlayers = 20;

// A per-item cost function c : 2^N -> Q>=0 with c(empty) = 0.
//
// Combinatorial variants are evaluated exactly and memoized through the
// SetFunction returned by AsSetFunction().
class CostFn {
 public:
  using Rep = std::variant<TableCost, SetCoverCost, VertexCoverCost, MatchingCost>;

  static CostFn Table(SetFunction table, std::string name = "table");
  static CostFn SetCover(int num_elements, std::vector<PlayerSet> family);
  static CostFn VertexCover(Graph graph);
  static CostFn Matching(Graph graph);

  int num_players() const { return num_players_; }
  const Rep& rep() const { return rep_; }
  const std::string& name() const { return name_; }

  // True when some values are rational stand-ins for irrational ones,
  // accurate to approximation_error().
  bool is_approximation() const { return approximation_error_.sign() > 0; }
  Rat approximation_error() const { return approximation_error_; }
  CostFn WithApproximationError(Rat error) const;

  // Throws InfeasibleError when a set cover family cannot cover t.
  Rat Eval(PlayerSet t) const { return function_(t); }
  const SetFunction& AsSetFunction() const { return function_; }

 private:
  CostFn(Rep rep, int num_players, SetFunction function, std::string name);

  Rep rep_;
  int num_players_;
  SetFunction function_;
  std::string name_;
  Rat approximation_error_;
};

inline Rat EvalCost(const CostFn& c, PlayerSet t) { return c.Eval(t); }

// Exhaustive class verdicts; throws SizeLimitError beyond the
// subadditivity limits (16 players when non-decreasing, 12 otherwise).
ClassFlags CheckCostClass(const SetFunction& c);
inline ClassFlags CheckCostClass(const CostFn& c) {
  return CheckCostClass(c.AsSetFunction());
}

}  // namespace costshare

#endif  // COSTSHARE_COSTS_COST_FN_H_
