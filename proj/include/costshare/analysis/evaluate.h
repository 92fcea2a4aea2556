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

#ifndef COSTSHARE_ANALYSIS_EVALUATE_H_
#define COSTSHARE_ANALYSIS_EVALUATE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "costshare/analysis/social_cost.h"
#include "costshare/core/instance.h"
#include "costshare/core/rational.h"
#include "costshare/costs/alpha.h"
#include "costshare/mechanisms/iacsm.h"

namespace costshare {

enum class MechanismKind {
  kIacsm,
  kSequential,
  // IACSM with halved first-iteration offers; a known non-strategyproof
  // variant kept as a negative control for the deviation search.
  kIacsmHalvedOffers,
};

// "iacsm", "sm", "iacsm-halved-offers".
std::string_view MechanismName(MechanismKind kind);
// Throws PreconditionError naming the accepted ids.
MechanismKind ParseMechanism(std::string_view name);

struct MechanismSpec {
  MechanismKind kind = MechanismKind::kIacsm;
  // Sequential mechanism only; empty means 0, 1, ..., n-1.
  std::vector<int> order;
};

struct MechanismRun {
  Outcome outcome{Allocation::Empty(1, 1), {}};
  std::optional<Trace> trace;  // iterative mechanisms only
};

MechanismRun RunMechanism(const Instance& instance, const MechanismSpec& spec);

struct InvariantFlags {
  bool individually_rational = true;
  bool no_positive_transfers = true;
  // Trace checks; empty for mechanisms without a trace.
  std::optional<bool> trace_monotone;
  std::optional<bool> refinement;
  std::optional<bool> final_set_structure;

  bool AllHold() const;
};

// Largest value of each estimator over the instance's cost functions
// (per item when separable, the allocation cost otherwise). An estimator
// is omitted when the instance exceeds its size limit.
struct InstanceAlphas {
  std::optional<AlphaReport> average_decreasing;
  std::optional<AlphaReport> min_bounded;
  std::optional<AlphaReport> max_bounded;
};
InstanceAlphas ComputeInstanceAlphas(const Instance& instance);

struct RunReport {
  MechanismKind mechanism = MechanismKind::kIacsm;
  Outcome outcome{Allocation::Empty(1, 1), {}};
  std::optional<Trace> trace;
  Rat allocation_cost;
  Rat total_payment;
  // Sum of payments over C(A); 1 when both vanish, empty when only the
  // cost does.
  std::optional<Rat> budget_ratio;
  Rat social_cost;
  Rat optimal_social_cost;
  Allocation optimal_allocation = Allocation::Empty(1, 1);
  // pi(A) / pi(A*) under the same convention.
  std::optional<Rat> approx_ratio;
  InvariantFlags flags;
};

// Runs the mechanism on the truthful profile and fills every field.
RunReport EvaluateRun(const Instance& instance, const MechanismSpec& spec);

}  // namespace costshare

#endif  // COSTSHARE_ANALYSIS_EVALUATE_H_
