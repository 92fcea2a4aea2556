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

#include "costshare/analysis/wgsp.h"

#include <utility>

#include "costshare/core/error.h"

namespace costshare {
namespace {

// Calls fn(coalition) for every coalition of exactly `size` players, in
// increasing bitmask order.
template <typename Fn>
bool ForEachCoalition(int n, int size, Fn&& fn) {
  const uint32_t limit = uint32_t{1} << n;
  for (uint32_t mask = 1; mask < limit; ++mask) {
    const PlayerSet coalition(mask);
    if (coalition.size() != size) continue;
    if (fn(coalition)) return true;
  }
  return false;
}

}  // namespace

std::string DeviationWitness::ToString() const {
  std::string out = "coalition " + coalition.ToString();
  const std::vector<int> members = coalition.Elements();
  for (size_t k = 0; k < members.size(); ++k) {
    out += "; player " + std::to_string(members[k]) + " reports [" +
           misreports[k].ToString() + "] gains " + gains[k].ToString();
  }
  return out;
}

std::vector<Rat> TrueUtilities(const Instance& instance,
                               const Outcome& outcome) {
  std::vector<Rat> utilities(instance.num_players());
  for (int i = 0; i < instance.num_players(); ++i) {
    utilities[i] =
        instance.valuation(i).Value(outcome.allocation.bundle(i)) -
        outcome.payments[i];
  }
  return utilities;
}

std::optional<DeviationWitness> WgspSearch(
    const Instance& instance, const MechanismSpec& spec, int coalition_max,
    std::span<const ValuationFn> misreport_space) {
  const int n = instance.num_players();
  if (coalition_max < 1) {
    throw PreconditionError("coalition size bound must be positive");
  }
  for (const ValuationFn& v : misreport_space) {
    if (v.num_items() != instance.num_items()) {
      throw PreconditionError("misreport has the wrong number of items");
    }
  }
  if (misreport_space.empty()) return std::nullopt;

  const std::vector<Rat> truthful =
      TrueUtilities(instance, RunMechanism(instance, spec).outcome);
  std::optional<DeviationWitness> found;
  for (int size = 1; size <= std::min(coalition_max, n) && !found; ++size) {
    ForEachCoalition(n, size, [&](PlayerSet coalition) {
      const std::vector<int> members = coalition.Elements();
      // Odometer over joint reports, first member varying slowest.
      std::vector<size_t> pick(members.size(), 0);
      while (true) {
        std::vector<ValuationFn> reported = instance.valuations();
        for (size_t k = 0; k < members.size(); ++k) {
          reported[members[k]] = misreport_space[pick[k]];
        }
        const Outcome outcome =
            RunMechanism(instance.WithValuations(reported), spec).outcome;
        const std::vector<Rat> utilities = TrueUtilities(instance, outcome);
        bool all_gain = true;
        for (int i : members) all_gain = all_gain && truthful[i] < utilities[i];
        if (all_gain) {
          DeviationWitness w{coalition, {}, {}};
          for (size_t k = 0; k < members.size(); ++k) {
            w.misreports.push_back(misreport_space[pick[k]]);
            w.gains.push_back(utilities[members[k]] - truthful[members[k]]);
          }
          found = std::move(w);
          return true;
        }
        size_t k = members.size();
        while (k > 0 && ++pick[k - 1] == misreport_space.size()) {
          pick[k - 1] = 0;
          --k;
        }
        if (k == 0) return false;
      }
    });
  }
  return found;
}

bool ReplayWitness(const Instance& instance, const MechanismSpec& spec,
                   const DeviationWitness& witness) {
  const std::vector<int> members = witness.coalition.Elements();
  if (members.size() != witness.misreports.size() ||
      members.size() != witness.gains.size()) {
    return false;
  }
  const std::vector<Rat> truthful =
      TrueUtilities(instance, RunMechanism(instance, spec).outcome);
  std::vector<ValuationFn> reported = instance.valuations();
  for (size_t k = 0; k < members.size(); ++k) {
    reported[members[k]] = witness.misreports[k];
  }
  const std::vector<Rat> deviated = TrueUtilities(
      instance, RunMechanism(instance.WithValuations(reported), spec).outcome);
  for (size_t k = 0; k < members.size(); ++k) {
    const Rat gain = deviated[members[k]] - truthful[members[k]];
    if (gain != witness.gains[k] || gain.sign() <= 0) return false;
  }
  return true;
}

std::vector<ValuationFn> GridMisreportSpace(const Instance& instance,
                                            std::span<const Rat> grid) {
  std::vector<ValuationFn> space;
  for (auto& v : EnumerateSymmetricSubmodular(instance.num_items(), grid)) {
    space.emplace_back(std::move(v));
  }
  for (const ValuationFn& v : instance.valuations()) {
    bool seen = false;
    for (const ValuationFn& s : space) seen = seen || s == v;
    if (!seen) space.push_back(v);
  }
  return space;
}

std::vector<Rat> MarginalGrid(const Rat& step, const Rat& top) {
  if (step.sign() <= 0 || top.sign() < 0) {
    throw PreconditionError("marginal grid needs a positive step");
  }
  std::vector<Rat> grid;
  for (Rat x; x <= top; x += step) grid.push_back(x);
  return grid;
}

}  // namespace costshare
