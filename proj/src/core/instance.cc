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

#include "costshare/core/instance.h"

#include <string>
#include <utility>

#include "costshare/core/error.h"

namespace costshare {
namespace {

void CheckValuations(const std::vector<ValuationFn>& valuations, int m) {
  if (valuations.empty()) throw PreconditionError("instance needs n >= 1");
  if (valuations.size() > static_cast<size_t>(kMaxGroundSize)) {
    throw SizeLimitError("too many players", kMaxGroundSize);
  }
  if (m < 1) throw PreconditionError("instance needs m >= 1");
  for (size_t i = 0; i < valuations.size(); ++i) {
    if (valuations[i].num_items() != m) {
      throw PreconditionError("valuation of player " + std::to_string(i) +
                              " is over " +
                              std::to_string(valuations[i].num_items()) +
                              " items, instance has " + std::to_string(m));
    }
  }
}

int ItemCount(const std::vector<SetFunction>& item_costs) {
  return static_cast<int>(item_costs.size());
}

}  // namespace

Instance::Instance(std::vector<ValuationFn> valuations, CostModel cost,
                   int num_items)
    : num_items_(num_items),
      valuations_(std::move(valuations)),
      cost_(std::move(cost)) {
  CheckValuations(valuations_, num_items_);
  if (const auto* sep = std::get_if<SeparableCosts>(&cost_)) {
    for (size_t j = 0; j < sep->per_item.size(); ++j) {
      const SetFunction& c = sep->per_item[j];
      if (c.ground_size() != num_players()) {
        throw PreconditionError("cost of item " + std::to_string(j) +
                                " is over " + std::to_string(c.ground_size()) +
                                " players, instance has " +
                                std::to_string(num_players()));
      }
      if (c.role() != SetFunctionRole::kCost) ValidateNormalized(c, "item cost");
    }
  } else {
    const auto& fn = std::get<AllocationCostFn>(cost_);
    if (fn.num_players() != num_players() || fn.num_items() != num_items_) {
      throw PreconditionError("allocation cost dimension mismatch");
    }
  }
}

Instance::Instance(std::vector<ValuationFn> valuations,
                   std::vector<SetFunction> item_costs)
    : Instance(std::move(valuations),
               CostModel(SeparableCosts{item_costs}), ItemCount(item_costs)) {}

Instance::Instance(std::vector<ValuationFn> valuations, AllocationCostFn cost)
    : Instance(std::move(valuations), CostModel(cost), cost.num_items()) {}

const std::vector<SetFunction>& Instance::item_costs() const {
  const auto* sep = std::get_if<SeparableCosts>(&cost_);
  if (sep == nullptr) {
    throw PreconditionError("instance has a non-separable cost model");
  }
  return sep->per_item;
}

Instance Instance::WithValuations(std::vector<ValuationFn> valuations) const {
  return Instance(std::move(valuations), cost_, num_items_);
}

bool Instance::AllValuationsSymmetric() const {
  for (const ValuationFn& v : valuations_) {
    if (!v.is_symmetric()) return false;
  }
  return true;
}

Rat Outcome::TotalPayment() const {
  Rat sum;
  for (const Rat& p : payments) sum += p;
  return sum;
}

Rat AllocationCost(const Instance& instance, const Allocation& a) {
  if (a.num_players() != instance.num_players() ||
      a.num_items() != instance.num_items()) {
    throw PreconditionError("allocation does not match instance dimensions");
  }
  if (!instance.is_separable()) {
    return std::get<AllocationCostFn>(instance.cost_model())(a);
  }
  Rat total;
  const auto& costs = instance.item_costs();
  for (int j = 0; j < instance.num_items(); ++j) total += costs[j](a.served(j));
  return total;
}

AllocationCostFn LiftSeparable(int num_players,
                               const std::vector<SetFunction>& item_costs) {
  for (const SetFunction& c : item_costs) {
    if (c.ground_size() != num_players) {
      throw PreconditionError("LiftSeparable: cost ground size mismatch");
    }
  }
  return AllocationCostFn(
      num_players, static_cast<int>(item_costs.size()),
      [item_costs](const Allocation& a) {
        Rat total;
        for (int j = 0; j < a.num_items(); ++j) total += item_costs[j](a.served(j));
        return total;
      },
      "lifted-separable");
}

}  // namespace costshare
