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

#ifndef COSTSHARE_ANALYSIS_ICB_H_
#define COSTSHARE_ANALYSIS_ICB_H_

#include <optional>
#include <span>

#include "costshare/analysis/evaluate.h"
#include "costshare/analysis/social_cost.h"
#include "costshare/core/instance.h"
#include "costshare/core/rational.h"

namespace costshare {

// The incremental-cost bound for the sequential mechanism:
//   sum_i Delta_i(A_{<i}, A*_i) <= beta * C(A*),
// where A_{<i} is what the mechanism fixed before player i and A* is the
// optimal allocation. Two choices of beta are tested: alpha_min * H_n and
// alpha_max, with each alpha the instance-wide estimate. An unbounded alpha
// leaves its bound vacuous.
struct IcbReport {
  Rat incremental_sum;
  Rat optimal_cost;  // C(A*)
  Optimum optimum{Rat(), Allocation::Empty(1, 1)};
  std::optional<Rat> alpha_min;
  std::optional<Rat> alpha_max;
  std::optional<Rat> beta_min;  // alpha_min * H_n
  std::optional<Rat> beta_max;  // alpha_max
  bool holds_min = true;
  bool holds_max = true;
};

IcbReport CheckIcbBound(const Instance& instance, std::span<const int> order);
IcbReport CheckIcbBound(const Instance& instance);

}  // namespace costshare

#endif  // COSTSHARE_ANALYSIS_ICB_H_
