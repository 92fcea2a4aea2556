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

#ifndef COSTSHARE_ANALYSIS_WGSP_H_
#define COSTSHARE_ANALYSIS_WGSP_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "costshare/analysis/evaluate.h"
#include "costshare/core/instance.h"
#include "costshare/core/rational.h"
#include "costshare/valuations/valuation.h"

namespace costshare {

// A coalition and joint misreport under which every member's true utility
// strictly increases.
struct DeviationWitness {
  PlayerSet coalition;
  std::vector<ValuationFn> misreports;  // one per member, ascending index
  std::vector<Rat> gains;               // strictly positive

  std::string ToString() const;
};

// v_i(A_i) - p_i under the instance's (true) valuations.
std::vector<Rat> TrueUtilities(const Instance& instance, const Outcome& outcome);

// Exhaustive falsification search: every coalition of size 1..coalition_max
// (by size, then bitmask order) and every joint misreport drawn from
// `misreport_space`. Returns the first deviation found, or nothing.
std::optional<DeviationWitness> WgspSearch(
    const Instance& instance, const MechanismSpec& spec, int coalition_max,
    std::span<const ValuationFn> misreport_space);

// Re-runs the deviation and checks that it reproduces the recorded gains.
bool ReplayWitness(const Instance& instance, const MechanismSpec& spec,
                   const DeviationWitness& witness);

// Symmetric submodular misreports over `grid` plus the instance's own
// valuations (so members may also imitate one another).
std::vector<ValuationFn> GridMisreportSpace(const Instance& instance,
                                            std::span<const Rat> grid);

// {0, step, 2 step, ..., top}.
std::vector<Rat> MarginalGrid(const Rat& step, const Rat& top);

}  // namespace costshare

#endif  // COSTSHARE_ANALYSIS_WGSP_H_
