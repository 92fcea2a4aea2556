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

#include "costshare/valuations/valuation.h"

#include <vector>

#include "costshare/core/error.h"
#include "gtest/gtest.h"

namespace costshare {
namespace {

TEST(SymmetricValuationTest, ValueDependsOnCountOnly) {
  const SymmetricSubmodularValuation v({Rat(3), Rat(1, 2)});
  EXPECT_EQ(v.num_items(), 2);
  EXPECT_EQ(v.Value(ItemSet{}), Rat(0));
  EXPECT_EQ(v.Value(ItemSet{0}), Rat(3));
  EXPECT_EQ(v.Value(ItemSet{1}), Rat(3));
  EXPECT_EQ(v.Value(ItemSet{0, 1}), Rat(7, 2));
  EXPECT_EQ(v.ValueOfCount(2), Rat(7, 2));
}

TEST(SymmetricValuationTest, RejectsIncreasingOrNegativeMarginals) {
  EXPECT_THROW(SymmetricSubmodularValuation({Rat(1), Rat(2)}),
               PreconditionError);
  EXPECT_THROW(SymmetricSubmodularValuation({Rat(-1)}), PreconditionError);
  EXPECT_NO_THROW(SymmetricSubmodularValuation({Rat(2), Rat(2), Rat(0)}));
}

TEST(TableValuationTest, RequiresNormalization) {
  EXPECT_THROW(TableValuation(SetFunction::FromTable(1, {Rat(1), Rat(2)})),
               PreconditionError);
  const TableValuation v(SetFunction::FromTable(1, {Rat(0), Rat(2)}));
  EXPECT_EQ(v.Value(ItemSet{0}), Rat(2));
}

TEST(ValuationFnTest, VariantDispatchAndTable) {
  const ValuationFn sym = SymmetricSubmodularValuation({Rat(2), Rat(1)});
  EXPECT_TRUE(sym.is_symmetric());
  EXPECT_EQ(sym.AsSetFunction().ToTable(),
            (std::vector<Rat>{0, 2, 2, 3}));
  EXPECT_EQ(sym.ToString(), "symmetric 2/1 1/1");

  const ValuationFn table =
      TableValuation(SetFunction::FromTable(2, {0, 1, 4, 4}));
  EXPECT_FALSE(table.is_symmetric());
  EXPECT_EQ(table.Value(ItemSet{1}), Rat(4));
  EXPECT_EQ(table.ToString(), "table 0/1 1/1 4/1 4/1");
  EXPECT_FALSE(sym == table);
  EXPECT_TRUE(sym == ValuationFn(SymmetricSubmodularValuation({Rat(2), Rat(1)})));
}

TEST(ValuationClassTest, TableClassFlags) {
  const ClassFlags f =
      CheckClass(TableValuation(SetFunction::FromTable(2, {0, 1, 4, 4})));
  EXPECT_TRUE(f.nondecreasing);
  EXPECT_FALSE(f.symmetric);
}

TEST(GenSymmetricTest, DeterministicAndNonIncreasing) {
  const std::vector<Rat> grid{0, 1, 2, 3};
  const auto a = GenSymmetricSubmodular(4, grid, 11);
  const auto b = GenSymmetricSubmodular(4, grid, 11);
  EXPECT_EQ(a, b);
  for (int t = 1; t < 4; ++t) EXPECT_LE(a.marginals()[t], a.marginals()[t - 1]);
  EXPECT_THROW(GenSymmetricSubmodular(2, std::vector<Rat>{}, 1),
               PreconditionError);
}

TEST(GenSymmetricTest, FixedSeedRegression) {
  // Pinned output of the seeded generator; a change here means results of
  // seeded experiments change too.
  const std::vector<Rat> grid{0, 1, 2, 3};
  const auto v = GenSymmetricSubmodular(2, grid, 7);
  EXPECT_EQ(v.marginals(), (std::vector<Rat>{Rat(3), Rat(2)}));
}

TEST(EnumerateSymmetricTest, CountsMultisets) {
  // Non-increasing length-2 sequences over 9 values: C(10, 2) = 45.
  std::vector<Rat> grid;
  for (int k = 0; k <= 8; ++k) grid.push_back(Rat(k, 2));
  EXPECT_EQ(EnumerateSymmetricSubmodular(2, grid).size(), 45u);
  EXPECT_EQ(EnumerateSymmetricSubmodular(1, grid).size(), 9u);
  // Duplicate grid values collapse.
  const std::vector<Rat> dup{1, 1, 0};
  EXPECT_EQ(EnumerateSymmetricSubmodular(2, dup).size(), 3u);
}

}  // namespace
}  // namespace costshare
