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

#ifndef COSTSHARE_COSTS_CATALOG_H_
#define COSTSHARE_COSTS_CATALOG_H_

#include <string>
#include <vector>

#include "costshare/core/rational.h"
#include "costshare/costs/cost_fn.h"

namespace costshare {

// Tolerance of the rational square roots used by IntersectionCost.
inline constexpr int64_t kSqrtDenominator = 1'000'000;

// Three players, average-decreasing (alpha = 1) but neither symmetric nor
// submodular: c({0})=5, c({1})=7, c({2})=8, c({0,1})=10, c({0,2})=c({1,2})=9,
// c(N)=11.
CostFn SubadditivityExampleCost();

// c(S) = 0, 1, 1, 3, 3, ... by |S|: 2-average-decreasing, not subadditive.
CostFn StepCost(int n);

// Player j (1-based) has standalone cost k/j; c(S) = min(k, sum of
// standalone costs). 1-average min-bounded; the tight instance for the
// sequential mechanism.
CostFn TightCost(int n, const Rat& k);

// Player j (1-based) has standalone cost sqrt(j); c(S) = max over S.
// Square roots are floored to a multiple of 1/kSqrtDenominator and the
// returned function is flagged as an approximation.
CostFn IntersectionCost(int n);

// c(S) = k for every nonempty S (public excludable good).
CostFn PublicGoodCost(int n, const Rat& k);

// c(S) = sum of weights over S.
CostFn AdditiveCost(const std::vector<Rat>& weights);

// Symmetric cost with c(S) = marginals[0] + ... + marginals[|S|-1].
CostFn SymmetricCost(const std::vector<Rat>& marginals);

// Symmetric cost given by its value per cardinality; values[0] must be 0.
CostFn CardinalityCost(const std::vector<Rat>& values, std::string name);

struct NamedCost {
  std::string name;
  CostFn cost;
};

// The named example functions above with the given parameters.
std::vector<NamedCost> CatalogCosts(int n, const Rat& k);

}  // namespace costshare

#endif  // COSTSHARE_COSTS_CATALOG_H_
