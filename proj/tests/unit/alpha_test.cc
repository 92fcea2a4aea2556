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

#include "costshare/costs/alpha.h"

#include <random>
#include <vector>

#include "costshare/core/error.h"
#include "costshare/core/instance.h"
#include "costshare/costs/catalog.h"
#include "costshare/costs/nonseparable.h"
#include "gtest/gtest.h"
#include "testing/oracles.h"

namespace costshare {
namespace {

using ::costshare::testing::NaiveAlphaAverageDecreasing;
using ::costshare::testing::NaiveAlphaBounded;
using ::costshare::testing::NaiveAlphaBoundedNs;
using ::costshare::testing::RandomCostTable;

TEST(AlphaTest, StepCostIsTwoAverageDecreasing) {
  const AlphaReport r = AlphaAverageDecreasing(StepCost(3));
  ASSERT_FALSE(r.unbounded());
  EXPECT_EQ(*r.alpha, Rat(2));
  EXPECT_EQ(r.ToString(), "2/1");
  EXPECT_TRUE(r.witness_subset.IsSubsetOf(r.witness_superset));
}

TEST(AlphaTest, PublicGoodMinBoundedIsN) {
  const AlphaReport r = AlphaMinBounded(PublicGoodCost(4, Rat(5)));
  EXPECT_EQ(*r.alpha, Rat(4));
  EXPECT_EQ(r.witness_superset, PlayerSet::Full(4));
}

TEST(AlphaTest, StarVertexCoverMaxBoundedIsDegree) {
  Graph star{4, {{0, 1}, {0, 2}, {0, 3}}};
  const AlphaReport r = AlphaMaxBounded(CostFn::VertexCover(star));
  EXPECT_EQ(*r.alpha, Rat(3));
}

TEST(AlphaTest, AdditiveCostsAreOneBounded) {
  const CostFn c = AdditiveCost({Rat(1), Rat(1), Rat(1)});
  EXPECT_EQ(*AlphaMinBounded(c).alpha, Rat(1));
  EXPECT_EQ(*AlphaMaxBounded(c).alpha, Rat(1));
  EXPECT_EQ(*AlphaAverageDecreasing(c).alpha, Rat(1));
}

TEST(AlphaTest, TightCostIsOneMinBounded) {
  EXPECT_EQ(*AlphaMinBounded(TightCost(3, Rat(6))).alpha, Rat(1));
}

TEST(AlphaTest, ZeroConventions) {
  EXPECT_EQ(ConventionRatio(Rat(0), Rat(0)), Rat(1));
  EXPECT_EQ(ConventionRatio(Rat(1), Rat(0)), std::nullopt);
  EXPECT_EQ(ConventionRatio(Rat(3), Rat(2)), Rat(3, 2));

  // Positive standalone cost with c(T) = 0 is unbounded.
  const SetFunction odd =
      SetFunction::FromTable(2, {0, 1, 1, 0}, SetFunctionRole::kCost);
  EXPECT_TRUE(AlphaMinBounded(odd).unbounded());
  EXPECT_EQ(AlphaMinBounded(odd).ToString(), "unbounded");

  // The zero function is 1-bounded in every sense.
  const SetFunction zero =
      SetFunction::FromTable(2, {0, 0, 0, 0}, SetFunctionRole::kCost);
  EXPECT_EQ(*AlphaAverageDecreasing(zero).alpha, Rat(1));
  EXPECT_EQ(*AlphaMaxBounded(zero).alpha, Rat(1));
}

TEST(AlphaTest, SeparatingFunctionGrowsWithN) {
  Rat previous;
  for (int n : {4, 9, 16}) {
    const CostFn c = IntersectionCost(n);
    const Rat avg = *AlphaAverageDecreasing(c).alpha;
    const double half_root = std::sqrt(static_cast<double>(n)) / 2;
    EXPECT_GE(avg.ToDouble(), half_root - 1e-4);
    EXPECT_LT(previous, avg);
    previous = avg;
  }
}

TEST(AlphaTest, SizeLimits) {
  EXPECT_THROW(AlphaAverageDecreasing(StepCost(kMaxAverageDecreasingPlayers + 1)),
               SizeLimitError);
  EXPECT_NO_THROW(AlphaMinBounded(StepCost(kMaxAverageDecreasingPlayers + 1)));
}

TEST(AlphaOracleTest, EstimatorsMatchNaiveDoubleLoop) {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 60; ++round) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const SetFunction c = RandomCostTable(n, rng, 8, round % 3 == 0 ? 10 : 0);
    EXPECT_EQ(AlphaAverageDecreasing(c).alpha, NaiveAlphaAverageDecreasing(c))
        << "round " << round;
    EXPECT_EQ(AlphaMinBounded(c).alpha, NaiveAlphaBounded(c, false))
        << "round " << round;
    EXPECT_EQ(AlphaMaxBounded(c).alpha, NaiveAlphaBounded(c, true))
        << "round " << round;
  }
}

TEST(AlphaNsTest, MatchesNaiveOnBuiltins) {
  std::mt19937_64 rng(17);
  const std::vector<NonSeparableSpec> specs = {
      {"served-players", {}},
      {"shared-setup", {Rat(3), Rat(1, 2)}},
      {"capped-union", {Rat(2)}},
  };
  for (const auto& spec : specs) {
    for (auto [n, m] : {std::pair{2, 1}, {3, 2}, {2, 3}}) {
      const AllocationCostFn c = MakeNonSeparableCost(spec, n, m, {});
      EXPECT_EQ(AlphaMinBoundedNs(c).alpha, NaiveAlphaBoundedNs(c, false))
          << spec.name << " " << n << "x" << m;
      EXPECT_EQ(AlphaMaxBoundedNs(c).alpha, NaiveAlphaBoundedNs(c, true))
          << spec.name << " " << n << "x" << m;
    }
  }
  for (int round = 0; round < 10; ++round) {
    const int n = 2 + static_cast<int>(rng() % 2);
    const int m = 1 + static_cast<int>(rng() % 2);
    std::vector<SetFunction> items;
    for (int j = 0; j < m; ++j) items.push_back(RandomCostTable(n, rng));
    const AllocationCostFn c = LiftSeparable(n, items);
    EXPECT_EQ(AlphaMinBoundedNs(c).alpha, NaiveAlphaBoundedNs(c, false));
    EXPECT_EQ(AlphaMaxBoundedNs(c).alpha, NaiveAlphaBoundedNs(c, true));
  }
}

TEST(AlphaNsTest, SingleItemLiftMatchesSeparableOnFullAllocation) {
  // With one item and every player holding it, the non-separable ratio
  // over that allocation is the separable ratio restricted to |T| >= 2.
  const CostFn c = PublicGoodCost(3, Rat(6));
  const AllocationCostFn lifted = LiftSeparable(3, {c.AsSetFunction()});
  const std::vector<Allocation> sample{Allocation::Full(3, 1)};
  const AlphaReport sampled = AlphaMinBoundedNs(lifted, sample);
  EXPECT_TRUE(sampled.lower_bound);
  EXPECT_EQ(sampled.ToString(), ">=3/1");
  EXPECT_EQ(*sampled.alpha, *AlphaMinBounded(c).alpha);
  // Exhaustive search is at least the sampled value.
  EXPECT_LE(*sampled.alpha, *AlphaMinBoundedNs(lifted).alpha);
}

TEST(AlphaNsTest, SizeLimit) {
  const AllocationCostFn c =
      MakeNonSeparableCost({"served-players", {}}, 4, 4, {});
  EXPECT_THROW(AlphaMinBoundedNs(c), SizeLimitError);
}

}  // namespace
}  // namespace costshare
