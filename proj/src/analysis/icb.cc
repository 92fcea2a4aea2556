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

#include "costshare/analysis/icb.h"

#include <utility>
#include <vector>

#include "costshare/core/error.h"
#include "costshare/mechanisms/sequential.h"

namespace costshare {
namespace {

bool WithinBound(const Rat& lhs, const std::optional<Rat>& beta,
                 const Rat& cost) {
  return !beta || lhs <= *beta * cost;
}

std::optional<Rat> AlphaValue(const std::optional<AlphaReport>& report) {
  if (!report) {
    throw SizeLimitError("instance too large for the alpha estimators",
                         kMaxExhaustiveAllocationBits);
  }
  return report->alpha;
}

}  // namespace

IcbReport CheckIcbBound(const Instance& instance, std::span<const int> order) {
  const Outcome outcome = RunSequential(instance, order);
  Optimum optimum = OptimalSocialCost(instance);

  Allocation partial = Allocation::Empty(instance.num_players(),
                                         instance.num_items());
  Rat sum;
  for (int i : order) {
    sum += IncrementalCost(instance, partial, i, optimum.allocation.bundle(i));
    std::vector<ItemSet> bundles = partial.bundles();
    bundles[i] = outcome.allocation.bundle(i);
    partial = Allocation(instance.num_items(), std::move(bundles));
  }

  const InstanceAlphas alphas = ComputeInstanceAlphas(instance);
  IcbReport report;
  report.incremental_sum = sum;
  report.optimal_cost = AllocationCost(instance, optimum.allocation);
  report.optimum = std::move(optimum);
  report.alpha_min = AlphaValue(alphas.min_bounded);
  report.alpha_max = AlphaValue(alphas.max_bounded);
  if (report.alpha_min) {
    report.beta_min = *report.alpha_min * Harmonic(instance.num_players());
  }
  report.beta_max = report.alpha_max;
  report.holds_min = WithinBound(sum, report.beta_min, report.optimal_cost);
  report.holds_max = WithinBound(sum, report.beta_max, report.optimal_cost);
  return report;
}

IcbReport CheckIcbBound(const Instance& instance) {
  return CheckIcbBound(instance, DefaultOrder(instance.num_players()));
}

}  // namespace costshare
