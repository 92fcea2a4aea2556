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

#ifndef COSTSHARE_MECHANISMS_SEQUENTIAL_H_
#define COSTSHARE_MECHANISMS_SEQUENTIAL_H_

#include <span>
#include <vector>

#include "costshare/core/allocation.h"
#include "costshare/core/instance.h"
#include "costshare/core/rational.h"

namespace costshare {

// The identity order 0, 1, ..., n-1.
std::vector<int> DefaultOrder(int num_players);

// Incremental cost of giving `bundle` to `player` on top of `partial`:
// C(partial with player's bundle replaced) - C(partial).
Rat IncrementalCost(const Instance& instance, const Allocation& partial,
                    int player, ItemSet bundle);

// Sequential mechanism: players are served in `order`; each receives the
// bundle maximizing declared value minus incremental cost given the bundles
// already fixed, and pays that incremental cost. Ties go to the
// numerically smallest bundle mask (item 0 is the lowest bit).
//
// Works for separable and non-separable costs and arbitrary valuations;
// requires m <= 20 and `order` to be a permutation of the players.
Outcome RunSequential(const Instance& instance, std::span<const int> order);
inline Outcome RunSequential(const Instance& instance) {
  return RunSequential(instance, DefaultOrder(instance.num_players()));
}

}  // namespace costshare

#endif  // COSTSHARE_MECHANISMS_SEQUENTIAL_H_
