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

#ifndef COSTSHARE_COSTS_ALPHA_H_
#define COSTSHARE_COSTS_ALPHA_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "costshare/core/allocation.h"
#include "costshare/core/rational.h"
#include "costshare/core/set_function.h"
#include "costshare/costs/cost_fn.h"

namespace costshare {

// The least alpha >= 1 for which a cost function satisfies one of the three
// average-cost inequalities, or unbounded when none does.
//
// Conventions at zero: a 0/0 ratio counts as 1 (the inequality is vacuous);
// a positive quantity over a zero average makes alpha unbounded.
struct AlphaReport {
  std::optional<Rat> alpha;  // empty means unbounded

  // Average-decreasing: the pair S subset of T attaining the maximum.
  // Min/max-bounded: T in witness_superset, the player attaining the
  // standalone min/max in witness_player.
  PlayerSet witness_subset;
  PlayerSet witness_superset;
  int witness_player = -1;
  // Non-separable estimators only.
  std::optional<Allocation> witness_allocation;

  // Set when the value came from a caller-supplied sample of allocations
  // and is therefore only a lower bound on alpha.
  bool lower_bound = false;

  bool unbounded() const { return !alpha.has_value(); }
  // "2/1" or "unbounded"; sampled results carry a ">=" prefix.
  std::string ToString() const;
};

inline constexpr int kMaxAverageDecreasingPlayers = 16;
inline constexpr int kMaxBoundedPlayers = 20;
// Exhaustive non-separable estimation enumerates (2^m)^n allocations.
inline constexpr int kMaxExhaustiveAllocationBits = 12;

// max over nonempty S subset of T of (c(T)/|T|) / (c(S)/|S|).
AlphaReport AlphaAverageDecreasing(const SetFunction& c);
// max over nonempty T of min_{j in T} c({j}) / (c(T)/|T|).
AlphaReport AlphaMinBounded(const SetFunction& c);
// max over nonempty T of max_{j in T} c({j}) / (c(T)/|T|).
AlphaReport AlphaMaxBounded(const SetFunction& c);

inline AlphaReport AlphaAverageDecreasing(const CostFn& c) {
  return AlphaAverageDecreasing(c.AsSetFunction());
}
inline AlphaReport AlphaMinBounded(const CostFn& c) {
  return AlphaMinBounded(c.AsSetFunction());
}
inline AlphaReport AlphaMaxBounded(const CostFn& c) {
  return AlphaMaxBounded(c.AsSetFunction());
}

// Non-separable versions: over allocations A and player sets T with
// |T| >= 2, the ratio of min/max_{j in T} C(A|_j) to C(A|_T)/|T|.
// Exhaustive when n*m <= 12, otherwise SizeLimitError; the sampled overloads
// evaluate only the given allocations and flag the result as a lower bound.
AlphaReport AlphaMinBoundedNs(const AllocationCostFn& c);
AlphaReport AlphaMaxBoundedNs(const AllocationCostFn& c);
AlphaReport AlphaMinBoundedNs(const AllocationCostFn& c,
                              std::span<const Allocation> sample);
AlphaReport AlphaMaxBoundedNs(const AllocationCostFn& c,
                              std::span<const Allocation> sample);

// Ratio numerator/denominator under the zero conventions above:
// 0/0 -> 1, positive/0 -> unbounded.
std::optional<Rat> ConventionRatio(const Rat& numerator, const Rat& denominator);

}  // namespace costshare

#endif  // COSTSHARE_COSTS_ALPHA_H_
