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

#include "costshare/costs/nonseparable.h"

#include "costshare/core/error.h"
#include "costshare/core/instance.h"

namespace costshare {
namespace {

void ExpectParams(const NonSeparableSpec& spec, size_t min_count,
                  size_t max_count) {
  if (spec.params.size() < min_count || spec.params.size() > max_count) {
    throw PreconditionError("wrong number of parameters for " + spec.name);
  }
  for (const Rat& p : spec.params) {
    if (p.sign() < 0) {
      throw PreconditionError(spec.name + " parameters must be non-negative");
    }
  }
}

}  // namespace

std::vector<std::string> NonSeparableNames() {
  return {"lifted-separable", "served-players", "shared-setup", "capped-union"};
}

AllocationCostFn MakeNonSeparableCost(
    const NonSeparableSpec& spec, int num_players, int num_items,
    const std::vector<SetFunction>& item_costs) {
  if (spec.name == "lifted-separable") {
    ExpectParams(spec, 0, 0);
    if (static_cast<int>(item_costs.size()) != num_items) {
      throw PreconditionError("lifted-separable needs one cost per item");
    }
    return LiftSeparable(num_players, item_costs);
  }
  if (spec.name == "served-players") {
    ExpectParams(spec, 0, 1);
    const Rat weight = spec.params.empty() ? Rat(1) : spec.params[0];
    return AllocationCostFn(
        num_players, num_items,
        [weight](const Allocation& a) {
          return weight * a.Recipients().size();
        },
        spec.name);
  }
  if (spec.name == "shared-setup") {
    ExpectParams(spec, 2, 2);
    const Rat setup = spec.params[0];
    const Rat unit = spec.params[1];
    return AllocationCostFn(
        num_players, num_items,
        [setup, unit](const Allocation& a) {
          if (a.IsEmpty()) return Rat(0);
          int pairs = 0;
          for (ItemSet b : a.bundles()) pairs += b.size();
          return setup + unit * pairs;
        },
        spec.name);
  }
  if (spec.name == "capped-union") {
    ExpectParams(spec, 1, 1);
    const Rat cap = spec.params[0];
    return AllocationCostFn(
        num_players, num_items,
        [cap](const Allocation& a) {
          int distinct = 0;
          for (PlayerSet t : a.served_sets()) distinct += t.empty() ? 0 : 1;
          return Min(cap, Rat(distinct));
        },
        spec.name);
  }
  throw PreconditionError("unknown allocation cost '" + spec.name + "'");
}

}  // namespace costshare
