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

#include "costshare/mechanisms/sequential.h"

#include <numeric>
#include <optional>
#include <utility>

#include "costshare/core/error.h"

namespace costshare {
namespace {

void CheckOrder(std::span<const int> order, int n) {
  if (static_cast<int>(order.size()) != n) {
    throw PreconditionError("player order must list every player once");
  }
  PlayerSet seen;
  for (int i : order) {
    if (i < 0 || i >= n || seen.contains(i)) {
      throw PreconditionError("player order is not a permutation");
    }
    seen = seen.With(i);
  }
}

Allocation WithBundle(const Allocation& a, int player, ItemSet bundle) {
  std::vector<ItemSet> bundles = a.bundles();
  bundles[player] = bundle;
  return Allocation(a.num_items(), std::move(bundles));
}

}  // namespace

std::vector<int> DefaultOrder(int num_players) {
  std::vector<int> order(num_players);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

Rat IncrementalCost(const Instance& instance, const Allocation& partial,
                    int player, ItemSet bundle) {
  if (instance.is_separable()) {
    Rat delta;
    const auto& costs = instance.item_costs();
    for (int j = 0; j < instance.num_items(); ++j) {
      const bool had = partial.bundle(player).contains(j);
      const bool has = bundle.contains(j);
      if (had == has) continue;
      const PlayerSet before = partial.served(j);
      const PlayerSet after = has ? before.With(player) : before.Without(player);
      delta += costs[j](after) - costs[j](before);
    }
    return delta;
  }
  return AllocationCost(instance, WithBundle(partial, player, bundle)) -
         AllocationCost(instance, partial);
}

Outcome RunSequential(const Instance& instance, std::span<const int> order) {
  const int n = instance.num_players();
  const int m = instance.num_items();
  CheckOrder(order, n);
  const uint32_t bundles = uint32_t{1} << m;

  Allocation partial = Allocation::Empty(n, m);
  std::vector<Rat> payments(n);
  for (int i : order) {
    const ValuationFn& v = instance.valuation(i);
    std::optional<Rat> best_utility;
    ItemSet best_bundle;
    Rat best_price;
    for (uint32_t s = 0; s < bundles; ++s) {
      const ItemSet bundle(s);
      const Rat price = IncrementalCost(instance, partial, i, bundle);
      const Rat utility = v.Value(bundle) - price;
      if (!best_utility || *best_utility < utility) {
        best_utility = utility;
        best_bundle = bundle;
        best_price = price;
      }
    }
    partial = WithBundle(partial, i, best_bundle);
    payments[i] = best_price;
  }
  return Outcome{std::move(partial), std::move(payments)};
}

}  // namespace costshare
