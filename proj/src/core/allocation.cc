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

#include "costshare/core/allocation.h"

#include <map>
#include <mutex>
#include <utility>

#include "costshare/core/error.h"

namespace costshare {
namespace {

void CheckDims(int num_players, int num_items) {
  if (num_players < 0 || num_players > kMaxGroundSize || num_items < 0 ||
      num_items > kMaxGroundSize) {
    throw SizeLimitError("allocation dimensions out of range", kMaxGroundSize);
  }
}

void CheckSameShape(const Allocation& a, const Allocation& b) {
  if (a.num_players() != b.num_players() || a.num_items() != b.num_items()) {
    throw PreconditionError("allocation dimension mismatch");
  }
}

}  // namespace

Allocation::Allocation(int num_items, std::vector<ItemSet> bundles)
    : num_items_(num_items), bundles_(std::move(bundles)) {
  CheckDims(static_cast<int>(bundles_.size()), num_items_);
  const ItemSet all = ItemSet::Full(num_items_);
  served_.assign(num_items_, PlayerSet());
  for (int i = 0; i < num_players(); ++i) {
    if (!bundles_[i].IsSubsetOf(all)) {
      throw PreconditionError("bundle of player " + std::to_string(i) +
                              " references an unknown item");
    }
    for (int j : bundles_[i].Elements()) served_[j] = served_[j].With(i);
  }
}

Allocation Allocation::Empty(int num_players, int num_items) {
  CheckDims(num_players, num_items);
  return Allocation(num_items, std::vector<ItemSet>(num_players));
}

Allocation Allocation::Full(int num_players, int num_items) {
  CheckDims(num_players, num_items);
  return Allocation(num_items, std::vector<ItemSet>(num_players,
                                                    ItemSet::Full(num_items)));
}

Allocation Allocation::FromServed(int num_players,
                                  std::vector<PlayerSet> served) {
  CheckDims(num_players, static_cast<int>(served.size()));
  std::vector<ItemSet> bundles(num_players);
  const PlayerSet all = PlayerSet::Full(num_players);
  for (int j = 0; j < static_cast<int>(served.size()); ++j) {
    if (!served[j].IsSubsetOf(all)) {
      throw PreconditionError("served set of item " + std::to_string(j) +
                              " references an unknown player");
    }
    for (int i : served[j].Elements()) bundles[i] = bundles[i].With(j);
  }
  return Allocation(static_cast<int>(served.size()), std::move(bundles));
}

bool Allocation::IsEmpty() const {
  for (ItemSet b : bundles_) {
    if (!b.empty()) return false;
  }
  return true;
}

PlayerSet Allocation::Recipients() const {
  PlayerSet out;
  for (int i = 0; i < num_players(); ++i) {
    if (!bundles_[i].empty()) out = out.With(i);
  }
  return out;
}

std::string Allocation::ToString() const {
  std::string s = "[";
  for (int i = 0; i < num_players(); ++i) {
    if (i > 0) s += ",";
    s += bundles_[i].ToString();
  }
  return s + "]";
}

Allocation UnionAllocations(const Allocation& s, const Allocation& t) {
  CheckSameShape(s, t);
  std::vector<ItemSet> bundles(s.num_players());
  for (int i = 0; i < s.num_players(); ++i) {
    bundles[i] = s.bundle(i) | t.bundle(i);
  }
  return Allocation(s.num_items(), std::move(bundles));
}

Allocation RestrictAllocation(const Allocation& a, PlayerSet players) {
  std::vector<ItemSet> bundles(a.num_players());
  for (int i = 0; i < a.num_players(); ++i) {
    if (players.contains(i)) bundles[i] = a.bundle(i);
  }
  return Allocation(a.num_items(), std::move(bundles));
}

bool IsComponentwiseSubset(const Allocation& s, const Allocation& t) {
  CheckSameShape(s, t);
  for (int i = 0; i < s.num_players(); ++i) {
    if (!s.bundle(i).IsSubsetOf(t.bundle(i))) return false;
  }
  return true;
}

struct AllocationCostFn::Impl {
  int num_players;
  int num_items;
  Eval eval;
  std::string name;
  size_t cache_cap;
  mutable std::mutex mu;
  mutable std::map<std::vector<ItemSet>, Rat> cache;
};

AllocationCostFn::AllocationCostFn(int num_players, int num_items, Eval eval,
                                   std::string name, size_t cache_cap) {
  CheckDims(num_players, num_items);
  auto impl = std::make_shared<Impl>();
  impl->num_players = num_players;
  impl->num_items = num_items;
  impl->eval = std::move(eval);
  impl->name = std::move(name);
  impl->cache_cap = cache_cap;
  impl_ = std::move(impl);
  if (!(*this)(Allocation::Empty(num_players, num_items)).is_zero()) {
    throw PreconditionError("allocation cost '" + impl_->name +
                            "': cost of the empty allocation must be 0");
  }
}

int AllocationCostFn::num_players() const { return impl_->num_players; }
int AllocationCostFn::num_items() const { return impl_->num_items; }
const std::string& AllocationCostFn::name() const { return impl_->name; }

Rat AllocationCostFn::operator()(const Allocation& a) const {
  if (a.num_players() != impl_->num_players ||
      a.num_items() != impl_->num_items) {
    throw PreconditionError("allocation cost '" + impl_->name +
                            "': dimension mismatch");
  }
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    auto it = impl_->cache.find(a.bundles());
    if (it != impl_->cache.end()) return it->second;
  }
  Rat value = impl_->eval(a);
  if (value.sign() < 0) {
    throw PreconditionError("allocation cost '" + impl_->name +
                            "' returned a negative value");
  }
  std::lock_guard<std::mutex> lock(impl_->mu);
  if (impl_->cache.size() < impl_->cache_cap) {
    impl_->cache.emplace(a.bundles(), value);
  }
  return value;
}

}  // namespace costshare
