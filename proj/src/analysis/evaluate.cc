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

#include "costshare/analysis/evaluate.h"

#include <functional>
#include <utility>

#include "costshare/core/error.h"
#include "costshare/mechanisms/sequential.h"
#include "costshare/mechanisms/trace_checks.h"

namespace costshare {
namespace {

// Unbounded dominates every finite value.
bool Exceeds(const AlphaReport& a, const AlphaReport& b) {
  if (a.unbounded()) return !b.unbounded();
  if (b.unbounded()) return false;
  return *b.alpha < *a.alpha;
}

std::optional<AlphaReport> WorstOverItems(
    const Instance& instance, int limit,
    const std::function<AlphaReport(const SetFunction&)>& estimator) {
  if (instance.num_players() > limit) return std::nullopt;
  std::optional<AlphaReport> worst;
  for (const SetFunction& c : instance.item_costs()) {
    AlphaReport r = estimator(c);
    if (!worst || Exceeds(r, *worst)) worst = std::move(r);
  }
  return worst;
}

}  // namespace

std::string_view MechanismName(MechanismKind kind) {
  switch (kind) {
    case MechanismKind::kIacsm:
      return "iacsm";
    case MechanismKind::kSequential:
      return "sm";
    case MechanismKind::kIacsmHalvedOffers:
      return "iacsm-halved-offers";
  }
  return "unknown";
}

MechanismKind ParseMechanism(std::string_view name) {
  for (MechanismKind kind :
       {MechanismKind::kIacsm, MechanismKind::kSequential,
        MechanismKind::kIacsmHalvedOffers}) {
    if (MechanismName(kind) == name) return kind;
  }
  throw PreconditionError("unknown mechanism '" + std::string(name) +
                          "' (expected iacsm or sm)");
}

MechanismRun RunMechanism(const Instance& instance, const MechanismSpec& spec) {
  switch (spec.kind) {
    case MechanismKind::kSequential:
      if (spec.order.empty()) return {RunSequential(instance), std::nullopt};
      return {RunSequential(instance, spec.order), std::nullopt};
    case MechanismKind::kIacsm:
    case MechanismKind::kIacsmHalvedOffers: {
      IacsmOptions options;
      options.halve_first_iteration_offers =
          spec.kind == MechanismKind::kIacsmHalvedOffers;
      IacsmResult result = RunIacsm(instance, options);
      return {std::move(result.outcome), std::move(result.trace)};
    }
  }
  throw PreconditionError("unknown mechanism kind");
}

bool InvariantFlags::AllHold() const {
  return individually_rational && no_positive_transfers &&
         trace_monotone.value_or(true) && refinement.value_or(true) &&
         final_set_structure.value_or(true);
}

InstanceAlphas ComputeInstanceAlphas(const Instance& instance) {
  InstanceAlphas out;
  if (instance.is_separable()) {
    out.average_decreasing =
        WorstOverItems(instance, kMaxAverageDecreasingPlayers,
                       [](const SetFunction& c) { return AlphaAverageDecreasing(c); });
    out.min_bounded =
        WorstOverItems(instance, kMaxBoundedPlayers,
                       [](const SetFunction& c) { return AlphaMinBounded(c); });
    out.max_bounded =
        WorstOverItems(instance, kMaxBoundedPlayers,
                       [](const SetFunction& c) { return AlphaMaxBounded(c); });
    return out;
  }
  if (instance.num_players() * instance.num_items() <=
      kMaxExhaustiveAllocationBits) {
    const auto& cost = std::get<AllocationCostFn>(instance.cost_model());
    out.min_bounded = AlphaMinBoundedNs(cost);
    out.max_bounded = AlphaMaxBoundedNs(cost);
  }
  return out;
}

RunReport EvaluateRun(const Instance& instance, const MechanismSpec& spec) {
  MechanismRun run = RunMechanism(instance, spec);
  RunReport report;
  report.mechanism = spec.kind;
  report.allocation_cost = AllocationCost(instance, run.outcome.allocation);
  report.total_payment = run.outcome.TotalPayment();
  report.budget_ratio =
      ConventionRatio(report.total_payment, report.allocation_cost);
  report.social_cost = SocialCost(instance, run.outcome.allocation);
  Optimum optimum = OptimalSocialCost(instance);
  report.optimal_social_cost = optimum.social_cost;
  report.optimal_allocation = std::move(optimum.allocation);
  report.approx_ratio =
      ConventionRatio(report.social_cost, report.optimal_social_cost);

  for (int i = 0; i < instance.num_players(); ++i) {
    const Rat& pay = run.outcome.payments[i];
    if (pay.sign() < 0) report.flags.no_positive_transfers = false;
    const Rat value =
        instance.valuation(i).Value(run.outcome.allocation.bundle(i));
    if (value < pay) report.flags.individually_rational = false;
  }
  if (run.trace) {
    report.flags.trace_monotone = VerifyTraceMonotone(*run.trace);
    report.flags.refinement = VerifyRefinement(run.outcome, *run.trace);
    report.flags.final_set_structure =
        VerifyFinalSetStructure(run.outcome, *run.trace);
  }
  report.outcome = std::move(run.outcome);
  report.trace = std::move(run.trace);
  return report;
}

}  // namespace costshare
