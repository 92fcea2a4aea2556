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

#ifndef COSTSHARE_CORE_ALLOCATION_H_
#define COSTSHARE_CORE_ALLOCATION_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "costshare/core/rational.h"
#include "costshare/core/subset.h"

namespace costshare {

// An assignment of item bundles to players, A = (A_1, ..., A_n).
//
// The dual view T_j = { i : j in A_i } is derived at construction, so the
// two views agree by construction for every Allocation value.
class Allocation {
 public:
  Allocation(int num_items, std::vector<ItemSet> bundles);

  static Allocation Empty(int num_players, int num_items);
  static Allocation Full(int num_players, int num_items);
  static Allocation FromServed(int num_players, std::vector<PlayerSet> served);

  int num_players() const { return static_cast<int>(bundles_.size()); }
  int num_items() const { return num_items_; }

  ItemSet bundle(int player) const { return bundles_[player]; }
  PlayerSet served(int item) const { return served_[item]; }
  const std::vector<ItemSet>& bundles() const { return bundles_; }
  const std::vector<PlayerSet>& served_sets() const { return served_; }

  bool IsEmpty() const;
  // Players with a non-empty bundle.
  PlayerSet Recipients() const;

  // "[{0,1},{},{1}]"
  std::string ToString() const;

  friend bool operator==(const Allocation& a, const Allocation& b) {
    return a.num_items_ == b.num_items_ && a.bundles_ == b.bundles_;
  }

 private:
  int num_items_;
  std::vector<ItemSet> bundles_;
  std::vector<PlayerSet> served_;
};

// Componentwise union (S_1 u T_1, ..., S_n u T_n).
Allocation UnionAllocations(const Allocation& s, const Allocation& t);

// A|_S: players in S keep their bundles, everyone else receives nothing.
Allocation RestrictAllocation(const Allocation& a, PlayerSet players);

// S_i subset of T_i for every player.
bool IsComponentwiseSubset(const Allocation& s, const Allocation& t);

// A general (possibly non-separable) cost C over allocations.
//
// Evaluations are memoized; the cache is mutex-guarded and capped. The
// callback must satisfy C(empty allocation) = 0 and return values >= 0;
// both are checked.
class AllocationCostFn {
 public:
  using Eval = std::function<Rat(const Allocation&)>;

  AllocationCostFn(int num_players, int num_items, Eval eval,
                   std::string name = "custom",
                   size_t cache_cap = size_t{1} << 20);

  int num_players() const;
  int num_items() const;
  const std::string& name() const;

  Rat operator()(const Allocation& a) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

}  // namespace costshare

#endif  // COSTSHARE_CORE_ALLOCATION_H_
