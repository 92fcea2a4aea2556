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

#ifndef COSTSHARE_CORE_INSTANCE_H_
#define COSTSHARE_CORE_INSTANCE_H_

#include <variant>
#include <vector>

#include "costshare/core/allocation.h"
#include "costshare/core/rational.h"
#include "costshare/core/set_function.h"
#include "costshare/valuations/valuation.h"

namespace costshare {

// Per-item cost functions c_j over player subsets; C(A) = sum_j c_j(T_j).
struct SeparableCosts {
  std::vector<SetFunction> per_item;
};

using CostModel = std::variant<SeparableCosts, AllocationCostFn>;

// Players, items, a valuation per player and the cost model.
//
// Invariants (checked at construction): n >= 1, m >= 1, every valuation is
// over m items, separable costs are over n players with c_j(empty) = 0 and
// non-negative values.
class Instance {
 public:
  Instance(std::vector<ValuationFn> valuations,
           std::vector<SetFunction> item_costs);
  Instance(std::vector<ValuationFn> valuations, AllocationCostFn cost);

  int num_players() const { return static_cast<int>(valuations_.size()); }
  int num_items() const { return num_items_; }

  const ValuationFn& valuation(int player) const { return valuations_[player]; }
  const std::vector<ValuationFn>& valuations() const { return valuations_; }

  bool is_separable() const {
    return std::holds_alternative<SeparableCosts>(cost_);
  }
  // Throws PreconditionError on a non-separable instance.
  const std::vector<SetFunction>& item_costs() const;
  const SetFunction& item_cost(int item) const { return item_costs()[item]; }
  const CostModel& cost_model() const { return cost_; }

  // Same costs, different declared valuations.
  Instance WithValuations(std::vector<ValuationFn> valuations) const;

  bool AllValuationsSymmetric() const;

 private:
  Instance(std::vector<ValuationFn> valuations, CostModel cost, int num_items);

  int num_items_;
  std::vector<ValuationFn> valuations_;
  CostModel cost_;
};

// Payments per player alongside the allocation they pay for.
struct Outcome {
  Allocation allocation;
  std::vector<Rat> payments;

  Rat TotalPayment() const;
};

// Execution record of the iterative ascending mechanism.
struct Trace {
  // Players in the order they were finalized.
  std::vector<int> order;
  // Per item, the players who withdrew from it, in withdrawal order.
  std::vector<std::vector<int>> withdrawals;
  // Per item, the cost share at the start of each iteration followed by the
  // final share (n + 1 snapshots).
  std::vector<std::vector<Rat>> share_history;
  // Bundle finalized in each iteration.
  std::vector<ItemSet> bundle_history;
};

// C(A): sum_j c_j(T_j) for separable instances, the oracle otherwise.
Rat AllocationCost(const Instance& instance, const Allocation& a);

// The separable cost C(A) = sum_j c_j(T_j) as an allocation cost oracle.
AllocationCostFn LiftSeparable(int num_players,
                               const std::vector<SetFunction>& item_costs);

}  // namespace costshare

#endif  // COSTSHARE_CORE_INSTANCE_H_
