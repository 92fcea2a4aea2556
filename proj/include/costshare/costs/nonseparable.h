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

#ifndef COSTSHARE_COSTS_NONSEPARABLE_H_
#define COSTSHARE_COSTS_NONSEPARABLE_H_

#include <string>
#include <vector>

#include "costshare/core/allocation.h"
#include "costshare/core/rational.h"
#include "costshare/core/set_function.h"

namespace costshare {

// A named built-in allocation cost and its parameters, as written in
// instance files.
//
//   lifted-separable          sum_j c_j(T_j) over the given item costs
//   served-players [w]        w times the number of players with a
//                             non-empty bundle (w defaults to 1)
//   shared-setup K u          K if anything is allocated, plus u per
//                             (player, item) pair allocated
//   capped-union K            min(K, number of distinct items allocated)
//
// All four are non-decreasing and subadditive for non-negative parameters.
struct NonSeparableSpec {
  std::string name;
  std::vector<Rat> params;

  friend bool operator==(const NonSeparableSpec&,
                         const NonSeparableSpec&) = default;
};

std::vector<std::string> NonSeparableNames();

// `item_costs` is consulted only by lifted-separable. Throws
// PreconditionError on an unknown name or bad parameters.
AllocationCostFn MakeNonSeparableCost(const NonSeparableSpec& spec,
                                      int num_players, int num_items,
                                      const std::vector<SetFunction>& item_costs);

}  // namespace costshare

#endif  // COSTSHARE_COSTS_NONSEPARABLE_H_
