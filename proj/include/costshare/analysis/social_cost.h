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

#ifndef COSTSHARE_ANALYSIS_SOCIAL_COST_H_
#define COSTSHARE_ANALYSIS_SOCIAL_COST_H_

#include "costshare/core/allocation.h"
#include "costshare/core/instance.h"
#include "costshare/core/rational.h"

namespace costshare {

// pi(A) = C(A) + sum_i [v_i(M) - v_i(A_i)].
Rat SocialCost(const Instance& instance, const Allocation& a);

struct Optimum {
  Rat social_cost;
  Allocation allocation;
};

// Allocations are ordered by (T_1, ..., T_m) with each served set compared
// as a player bitmask; all optimum routines return the smallest minimizer
// in that order.

// Enumerates all (2^m)^n allocations; requires n * m <= 20.
inline constexpr int kMaxExhaustiveBits = 20;
Optimum OptimalSocialCostExhaustive(const Instance& instance);

// Dynamic program over per-player item counts for separable costs and
// symmetric valuations; requires (m+1)^n <= 2^20.
Optimum OptimalSocialCostByCounts(const Instance& instance);
bool CountsProgramApplies(const Instance& instance);

// The counts program when it applies, exhaustive search otherwise.
// Throws SizeLimitError when neither fits.
Optimum OptimalSocialCost(const Instance& instance);

}  // namespace costshare

#endif  // COSTSHARE_ANALYSIS_SOCIAL_COST_H_
