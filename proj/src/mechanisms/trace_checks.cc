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

#include "costshare/mechanisms/trace_checks.h"

#include <cstddef>

#include "costshare/mechanisms/iacsm.h"

namespace costshare {

bool VerifyTraceMonotone(const Trace& trace) {
  for (const auto& history : trace.share_history) {
    for (size_t t = 1; t < history.size(); ++t) {
      if (history[t] < history[t - 1]) return false;
    }
  }
  return true;
}

bool VerifyRefinement(const Outcome& outcome, const Trace& trace) {
  for (size_t t = 1; t < trace.order.size(); ++t) {
    const ItemSet earlier = outcome.allocation.bundle(trace.order[t - 1]);
    const ItemSet later = outcome.allocation.bundle(trace.order[t]);
    if (!earlier.IsSubsetOf(later)) return false;
  }
  return true;
}

bool VerifyFinalSetStructure(const Outcome& outcome, const Trace& trace) {
  const Allocation& a = outcome.allocation;
  for (int j = 0; j < a.num_items(); ++j) {
    if (a.served(j).empty()) continue;
    PlayerSet suffix;
    bool started = false;
    for (int player : trace.order) {
      if (a.bundle(player).contains(j)) started = true;
      if (started) suffix = suffix.With(player);
    }
    if (suffix != a.served(j)) return false;
  }
  return true;
}

bool VerifySharesMatchRecomputation(const Instance& instance,
                                    const Trace& trace) {
  const auto& costs = instance.item_costs();
  for (size_t j = 0; j < trace.share_history.size(); ++j) {
    const auto& withdrawals = trace.withdrawals[j];
    // Snapshot t is taken after iterations 0..t-1; count the withdrawals
    // made by the players finalized in those iterations.
    for (size_t t = 0; t < trace.share_history[j].size(); ++t) {
      int withdrawn = 0;
      for (int player : withdrawals) {
        size_t position = 0;
        while (trace.order[position] != player) ++position;
        if (position < t) ++withdrawn;
      }
      if (MaxAverageShare(costs[j], withdrawals, withdrawn) !=
          trace.share_history[j][t]) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace costshare
