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

#include <stdexcept>
#include <thread>
#include <vector>

#include "costshare/core/allocation.h"
#include "costshare/core/error.h"
#include "costshare/core/set_function.h"
#include "costshare/core/subset.h"
#include "gtest/gtest.h"

namespace costshare {
namespace {

TEST(SubsetTest, BasicOperations) {
  const PlayerSet s{0, 2};
  EXPECT_EQ(s.size(), 2);
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(1));
  EXPECT_EQ(s.ToString(), "{0,2}");
  EXPECT_EQ(s.With(1), PlayerSet::Full(3));
  EXPECT_EQ(s.Without(0), PlayerSet::Single(2));
  EXPECT_TRUE(s.IsSubsetOf(PlayerSet::Full(3)));
  EXPECT_FALSE(PlayerSet::Full(3).IsSubsetOf(s));
  EXPECT_EQ(s.Lowest(), 0);
  EXPECT_EQ((PlayerSet::Full(3) - s), PlayerSet::Single(1));
  EXPECT_EQ(PlayerSet().ToString(), "{}");
  EXPECT_EQ(s.Elements(), (std::vector<int>{0, 2}));
}

TEST(SubsetTest, ForEachSubsetVisitsAllSubmasks) {
  std::vector<uint32_t> seen;
  ForEachSubsetOf(0b101u, [&](uint32_t s) { seen.push_back(s); });
  std::sort(seen.begin(), seen.end());
  EXPECT_EQ(seen, (std::vector<uint32_t>{0b000, 0b001, 0b100, 0b101}));
}

SetFunction Table(int k, std::vector<Rat> values,
                  SetFunctionRole role = SetFunctionRole::kGeneric) {
  return SetFunction::FromTable(k, std::move(values), role);
}

TEST(SetFunctionTest, TableLookupByMask) {
  const SetFunction f = Table(2, {0, 1, 2, 3});
  EXPECT_EQ(f(PlayerSet{0, 1}), Rat(3));
  EXPECT_EQ(f(ItemSet{1}), Rat(2));
  EXPECT_TRUE(f.is_table());
  EXPECT_EQ(f.ground_size(), 2);
}

TEST(SetFunctionTest, TableSizeAndRoleChecked) {
  EXPECT_THROW(Table(2, {0, 1, 2}), PreconditionError);
  EXPECT_THROW(Table(1, {1, 1}, SetFunctionRole::kCost), PreconditionError);
  EXPECT_THROW(Table(1, {0, -1}, SetFunctionRole::kValuation),
               PreconditionError);
  EXPECT_NO_THROW(Table(1, {1, -1}));
  EXPECT_THROW(Table(kMaxTableGroundSize + 1, {}), SizeLimitError);
}

TEST(SetFunctionTest, OracleIsMemoizedAndCapped) {
  int calls = 0;
  const SetFunction f = SetFunction::FromOracle(
      3, [&calls](uint32_t s) { ++calls; return Rat(PlayerSet(s).size()); },
      SetFunctionRole::kCost, /*cache_cap=*/4);
  // Construction probes f(empty) once.
  EXPECT_EQ(calls, 1);
  EXPECT_EQ(f(PlayerSet{0, 1}), Rat(2));
  EXPECT_EQ(f(PlayerSet{0, 1}), Rat(2));
  EXPECT_EQ(calls, 2);
  for (uint32_t s = 0; s < 8; ++s) f(s);
  EXPECT_LE(f.cached_entries(), 4u);
  EXPECT_EQ(f.Materialize().ToTable(), f.ToTable());
}

TEST(SetFunctionTest, OracleRoleViolationSurfacesOnEvaluation) {
  const SetFunction f = SetFunction::FromOracle(
      1, [](uint32_t s) { return s ? Rat(-1) : Rat(0); },
      SetFunctionRole::kCost);
  EXPECT_THROW(f(1u), PreconditionError);
}

TEST(SetFunctionTest, ConcurrentOracleEvaluationIsConsistent) {
  const SetFunction f = SetFunction::FromOracle(
      10, [](uint32_t s) { return Rat(PlayerSet(s).size(), 3); },
      SetFunctionRole::kCost);
  std::vector<std::thread> threads;
  std::vector<int> mismatches(4, 0);
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (uint32_t s = 0; s < 1024; ++s) {
        if (f(s) != Rat(PlayerSet(s).size(), 3)) ++mismatches[t];
      }
    });
  }
  for (auto& th : threads) th.join();
  for (int m : mismatches) EXPECT_EQ(m, 0);
}

TEST(ClassifyTest, CardinalityFunctionHasEveryProperty) {
  std::vector<Rat> values(8);
  for (uint32_t s = 0; s < 8; ++s) values[s] = Rat(PlayerSet(s).size());
  const ClassFlags f = Classify(Table(3, values));
  EXPECT_TRUE(f.nondecreasing);
  EXPECT_TRUE(f.submodular);
  EXPECT_TRUE(f.symmetric);
  EXPECT_TRUE(f.xos_symmetric);
  EXPECT_EQ(f.subadditive, true);
}

TEST(ClassifyTest, UnequalAdditiveIsNotSymmetric) {
  const ClassFlags f = Classify(Table(2, {0, 1, 2, 3}));
  EXPECT_TRUE(f.nondecreasing);
  EXPECT_TRUE(f.submodular);
  EXPECT_FALSE(f.symmetric);
  EXPECT_EQ(f.subadditive, true);
}

TEST(ClassifyTest, StepFunctionIsNotSubadditive) {
  // 0, 1, 1, 3 by cardinality on three players.
  std::vector<Rat> values(8);
  const Rat by_size[] = {0, 1, 1, 3};
  for (uint32_t s = 0; s < 8; ++s) values[s] = by_size[PlayerSet(s).size()];
  const ClassFlags f = Classify(Table(3, values));
  EXPECT_TRUE(f.nondecreasing);
  EXPECT_TRUE(f.symmetric);
  EXPECT_FALSE(f.submodular);
  EXPECT_FALSE(f.xos_symmetric);
  EXPECT_EQ(f.subadditive, false);
}

TEST(ClassifyTest, SupermodularPairIsNotSubmodular) {
  const ClassFlags f = Classify(Table(2, {0, 1, 1, 3}));
  EXPECT_FALSE(f.submodular);
  EXPECT_EQ(f.subadditive, false);
}

TEST(ClassifyTest, DecreasingFunctionDetected) {
  const ClassFlags f = Classify(Table(2, {0, 2, 2, 1}));
  EXPECT_FALSE(f.nondecreasing);
  EXPECT_EQ(f.subadditive, true);
}

TEST(AllocationTest, ViewsAgree) {
  const Allocation a(2, {ItemSet{0, 1}, ItemSet{}, ItemSet{1}});
  EXPECT_EQ(a.num_players(), 3);
  EXPECT_EQ(a.served(0), PlayerSet{0});
  EXPECT_EQ(a.served(1), (PlayerSet{0, 2}));
  EXPECT_EQ(a.Recipients(), (PlayerSet{0, 2}));
  EXPECT_EQ(a.ToString(), "[{0,1},{},{1}]");
  EXPECT_EQ(Allocation::FromServed(3, {PlayerSet{0}, PlayerSet{0, 2}}), a);
  EXPECT_TRUE(Allocation::Empty(3, 2).IsEmpty());
  EXPECT_EQ(Allocation::Full(2, 2).served(1), PlayerSet::Full(2));
}

TEST(AllocationTest, BundleOutsideItemsRejected) {
  EXPECT_THROW(Allocation(1, {ItemSet{1}}), PreconditionError);
}

TEST(AllocationTest, UnionRestrictAndSubset) {
  const Allocation a(2, {ItemSet{0}, ItemSet{}});
  const Allocation b(2, {ItemSet{1}, ItemSet{1}});
  const Allocation u = UnionAllocations(a, b);
  EXPECT_EQ(u.bundle(0), (ItemSet{0, 1}));
  EXPECT_TRUE(IsComponentwiseSubset(a, u));
  EXPECT_FALSE(IsComponentwiseSubset(u, a));
  EXPECT_EQ(RestrictAllocation(u, PlayerSet{1}).bundle(0), ItemSet());
  EXPECT_EQ(RestrictAllocation(u, PlayerSet{1}).bundle(1), ItemSet{1});
}

TEST(AllocationCostFnTest, MemoizesAndValidates) {
  int calls = 0;
  const AllocationCostFn c(
      2, 1,
      [&calls](const Allocation& a) {
        ++calls;
        return Rat(a.Recipients().size());
      },
      "count");
  const Allocation full = Allocation::Full(2, 1);
  EXPECT_EQ(c(full), Rat(2));
  EXPECT_EQ(c(full), Rat(2));
  EXPECT_EQ(c.name(), "count");
  const int after = calls;
  c(full);
  EXPECT_EQ(calls, after);

  EXPECT_THROW(AllocationCostFn(1, 1, [](const Allocation&) { return Rat(1); }),
               PreconditionError);
  EXPECT_THROW(c(Allocation::Full(3, 1)), PreconditionError);
}

}  // namespace
}  // namespace costshare
