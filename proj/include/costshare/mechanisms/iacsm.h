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

#ifndef COSTSHARE_MECHANISMS_IACSM_H_
#define COSTSHARE_MECHANISMS_IACSM_H_

#include <span>
#include <utility>
#include <vector>

#include "costshare/core/instance.h"
#include "costshare/core/rational.h"
#include "costshare/core/set_function.h"
#include "costshare/core/subset.h"
#include "costshare/valuations/valuation.h"

namespace costshare {

struct IacsmOptions {
  // Negative control: in the first iteration players are offered half of
  // every cost share, while the shares themselves (and hence the payments)
  // are unchanged. The resulting mechanism is not strategyproof.
  bool halve_first_iteration_offers = false;
};

struct IacsmResult {
  Outcome outcome;
  Trace trace;
};

// Utility-maximizing bundle of a symmetric submodular bidder at the given
// per-item prices: walk the items by increasing price (ties by index) and
// take the t-th one while delta_t >= its price. Ties are accepted, which
// yields a maximum-size optimal bundle made of the cheapest items.
ItemSet GreedyBundle(const SymmetricSubmodularValuation& v,
                     std::span<const Rat> shares);

// Runs the iterative ascending cost sharing mechanism.
//
// Every item starts with T_j = N and share c_j(N)/n. Each iteration all
// active players compute GreedyBundle at the current shares; the one with
// the smallest bundle (lowest index on ties) is finalized, withdraws from
// the items outside her bundle, and each such item's share becomes
// max(share, c_j(T_j)/|T_j|). Payments are the final shares summed over
// the bundle.
//
// Requires a separable instance with symmetric submodular valuations;
// throws PreconditionError otherwise.
IacsmResult RunIacsm(const Instance& instance, IacsmOptions options = {});

// Share of an item after the first `withdrawn` entries of its withdrawal
// sequence, recomputed from scratch as the maximum average cost over the
// tentative sets seen so far: max over l <= withdrawn of c(R^l)/(n - l).
Rat MaxAverageShare(const SetFunction& cost, std::span<const int> withdrawals,
                    int withdrawn);

}  // namespace costshare

#endif  // COSTSHARE_MECHANISMS_IACSM_H_
