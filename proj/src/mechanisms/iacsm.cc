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

#include "costshare/mechanisms/iacsm.h"

#include <algorithm>
#include <numeric>

#include "costshare/core/error.h"

namespace costshare {

ItemSet GreedyBundle(const SymmetricSubmodularValuation& v,
                     std::span<const Rat> shares) {
  const int m = static_cast<int>(shares.size());
  if (v.num_items() != m) {
    throw PreconditionError("GreedyBundle: valuation/share size mismatch");
  }
  std::vector<int> by_price(m);
  std::iota(by_price.begin(), by_price.end(), 0);
  std::stable_sort(by_price.begin(), by_price.end(),
                   [&](int a, int b) { return shares[a] < shares[b]; });
  ItemSet bundle;
  for (int t = 0; t < m; ++t) {
    const int item = by_price[t];
    if (v.marginals()[t] < shares[item]) break;
    bundle = bundle.With(item);
  }
  return bundle;
}

IacsmResult RunIacsm(const Instance& instance, IacsmOptions options) {
  if (!instance.is_separable()) {
    throw PreconditionError("IACSM requires separable costs");
  }
  if (!instance.AllValuationsSymmetric()) {
    throw PreconditionError("IACSM requires symmetric submodular valuations");
  }
  const int n = instance.num_players();
  const int m = instance.num_items();
  const auto& costs = instance.item_costs();

  PlayerSet active = PlayerSet::Full(n);
  std::vector<PlayerSet> tentative(m, PlayerSet::Full(n));
  std::vector<Rat> shares(m);
  for (int j = 0; j < m; ++j) shares[j] = costs[j](tentative[j]) / n;

  IacsmResult result{Outcome{Allocation::Empty(n, m), std::vector<Rat>(n)},
                     Trace{}};
  Trace& trace = result.trace;
  trace.withdrawals.assign(m, {});
  trace.share_history.assign(m, {});
  std::vector<ItemSet> bundles(n);

  for (int iteration = 0; iteration < n; ++iteration) {
    for (int j = 0; j < m; ++j) trace.share_history[j].push_back(shares[j]);

    std::vector<Rat> offered = shares;
    if (options.halve_first_iteration_offers && iteration == 0) {
      for (Rat& s : offered) s /= 2;
    }
    int chosen = -1;
    ItemSet chosen_bundle;
    for (int i : active.Elements()) {
      ItemSet b = GreedyBundle(instance.valuation(i).symmetric(), offered);
      if (chosen == -1 || b.size() < chosen_bundle.size()) {
        chosen = i;
        chosen_bundle = b;
      }
    }

    bundles[chosen] = chosen_bundle;
    active = active.Without(chosen);
    trace.order.push_back(chosen);
    trace.bundle_history.push_back(chosen_bundle);
    for (int j = 0; j < m; ++j) {
      if (chosen_bundle.contains(j)) continue;
      tentative[j] = tentative[j].Without(chosen);
      trace.withdrawals[j].push_back(chosen);
      if (!tentative[j].empty()) {
        shares[j] = Max(shares[j], costs[j](tentative[j]) / tentative[j].size());
      }
    }
  }
  for (int j = 0; j < m; ++j) trace.share_history[j].push_back(shares[j]);

  result.outcome.allocation = Allocation(m, std::move(bundles));
  for (int i = 0; i < n; ++i) {
    Rat pay;
    for (int j : result.outcome.allocation.bundle(i).Elements()) pay += shares[j];
    result.outcome.payments[i] = pay;
  }
  return result;
}

Rat MaxAverageShare(const SetFunction& cost, std::span<const int> withdrawals,
                    int withdrawn) {
  const int n = cost.ground_size();
  PlayerSet remaining = PlayerSet::Full(n);
  Rat best = cost(remaining) / n;
  for (int l = 1; l <= withdrawn; ++l) {
    remaining = remaining.Without(withdrawals[l - 1]);
    if (remaining.empty()) break;
    best = Max(best, cost(remaining) / (n - l));
  }
  return best;
}

}  // namespace costshare
