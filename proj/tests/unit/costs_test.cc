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

#include <random>
#include <vector>

#include "costshare/core/error.h"
#include "costshare/costs/catalog.h"
#include "costshare/costs/combinatorial.h"
#include "costshare/costs/cost_fn.h"
#include "gtest/gtest.h"

namespace costshare {
namespace {

Graph Star(int leaves) {
  Graph g{leaves + 1, {}};
  for (int v = 1; v <= leaves; ++v) g.edges.emplace_back(0, v);
  return g;
}

Graph Triangle() { return Graph{3, {{0, 1}, {1, 2}, {0, 2}}}; }

Graph RandomGraph(int vertices, int edges, std::mt19937_64& rng,
                  bool bipartite) {
  Graph g{vertices, {}};
  while (static_cast<int>(g.edges.size()) < edges) {
    int a = static_cast<int>(rng() % vertices);
    int b = static_cast<int>(rng() % vertices);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (bipartite && !(a < vertices / 2 && b >= vertices / 2)) continue;
    bool dup = false;
    for (auto e : g.edges) dup = dup || e == std::make_pair(a, b);
    if (!dup) g.edges.emplace_back(a, b);
  }
  return g;
}

// Smallest vertex set touching every selected edge, by trying all vertex
// subsets.
int BruteVertexCover(const Graph& g, uint32_t edges) {
  int best = g.num_vertices;
  for (uint32_t vs = 0; vs < (uint32_t{1} << g.num_vertices); ++vs) {
    bool ok = true;
    for (size_t e = 0; e < g.edges.size() && ok; ++e) {
      if (!((edges >> e) & 1)) continue;
      ok = ((vs >> g.edges[e].first) & 1) || ((vs >> g.edges[e].second) & 1);
    }
    if (ok) best = std::min(best, std::popcount(vs));
  }
  return best;
}

// Largest pairwise vertex-disjoint subset of the selected edges.
int BruteMatching(const Graph& g, uint32_t edges) {
  int best = 0;
  for (uint32_t pick = edges;; pick = (pick - 1) & edges) {
    uint64_t used = 0;
    bool ok = true;
    for (size_t e = 0; e < g.edges.size() && ok; ++e) {
      if (!((pick >> e) & 1)) continue;
      const uint64_t both = (uint64_t{1} << g.edges[e].first) |
                            (uint64_t{1} << g.edges[e].second);
      ok = (used & both) == 0;
      used |= both;
    }
    if (ok) best = std::max(best, std::popcount(pick));
    if (pick == 0) break;
  }
  return best;
}

TEST(GraphTest, DegreeAndBipartiteness) {
  EXPECT_EQ(Star(3).MaxDegree(), 3);
  EXPECT_TRUE(Star(3).IsBipartite());
  EXPECT_FALSE(Triangle().IsBipartite());
  EXPECT_EQ(Triangle().MaxDegree(), 2);
}

TEST(VertexCoverTest, SmallGraphs) {
  EXPECT_EQ(MinVertexCover(Triangle(), 0b111), 2);
  EXPECT_EQ(MinVertexCover(Triangle(), 0b001), 1);
  EXPECT_EQ(MinVertexCover(Triangle(), 0), 0);
  EXPECT_EQ(MinVertexCover(Star(4), 0b1111), 1);
}

TEST(VertexCoverTest, MatchesBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 30; ++round) {
    const Graph g = RandomGraph(6, 8, rng, false);
    for (uint32_t s = 0; s < (uint32_t{1} << 8); s += 7) {
      ASSERT_EQ(MinVertexCover(g, s), BruteVertexCover(g, s)) << round << " " << s;
    }
  }
}

TEST(MatchingTest, MatchesBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 30; ++round) {
    const Graph bip = RandomGraph(8, 9, rng, true);
    const Graph any = RandomGraph(7, 9, rng, false);
    for (uint32_t s = 0; s < (uint32_t{1} << 9); s += 5) {
      ASSERT_EQ(MaxBipartiteMatching(bip, s), BruteMatching(bip, s));
      ASSERT_EQ(MaxMatchingExhaustive(bip, s), BruteMatching(bip, s));
      ASSERT_EQ(MaxMatchingExhaustive(any, s), BruteMatching(any, s));
    }
  }
}

TEST(SetCoverTest, ExactAndInfeasible) {
  // Family {0,1}, {1,2}, {2}: covering {0,2} needs two sets.
  const std::vector<uint32_t> family{0b011, 0b110, 0b100};
  EXPECT_EQ(MinSetCover(family, 0b101), 2);
  EXPECT_EQ(MinSetCover(family, 0b110), 1);
  EXPECT_EQ(MinSetCover(family, 0), 0);
  EXPECT_EQ(MinSetCover({0b001}, 0b010), std::nullopt);
}

TEST(SetCoverTest, MatchesBruteForce) {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 40; ++round) {
    std::vector<uint32_t> family;
    for (int k = 0; k < 6; ++k) family.push_back(static_cast<uint32_t>(rng() % 256));
    const uint32_t target = static_cast<uint32_t>(rng() % 256);
    std::optional<int> brute;
    for (uint32_t pick = 0; pick < 64; ++pick) {
      uint32_t covered = 0;
      for (int k = 0; k < 6; ++k) {
        if ((pick >> k) & 1) covered |= family[k];
      }
      if ((target & ~covered) == 0) {
        const int size = std::popcount(pick);
        if (!brute || size < *brute) brute = size;
      }
    }
    EXPECT_EQ(MinSetCover(family, target), brute) << round;
  }
}

TEST(CostFnTest, CombinatorialOracles) {
  const CostFn vc = CostFn::VertexCover(Triangle());
  EXPECT_EQ(vc.num_players(), 3);
  EXPECT_EQ(vc.Eval(PlayerSet::Full(3)), Rat(2));
  EXPECT_EQ(vc.Eval(PlayerSet{}), Rat(0));

  const CostFn matching = CostFn::Matching(Triangle());
  EXPECT_EQ(matching.Eval(PlayerSet::Full(3)), Rat(1));

  const CostFn sc = CostFn::SetCover(3, {PlayerSet{0, 1}, PlayerSet{1, 2}});
  EXPECT_EQ(sc.Eval(PlayerSet{0, 2}), Rat(2));
  EXPECT_EQ(std::get<SetCoverCost>(sc.rep()).MaxSetSize(), 2);

  const CostFn holes = CostFn::SetCover(3, {PlayerSet{0}});
  EXPECT_THROW(holes.Eval(PlayerSet{1}), InfeasibleError);
  EXPECT_THROW(CostFn::SetCover(2, {PlayerSet{3}}), PreconditionError);
}

TEST(CostFnTest, TableCostValidated) {
  EXPECT_THROW(CostFn::Table(SetFunction::FromTable(1, {Rat(1), Rat(1)})),
               PreconditionError);
  const CostFn c = CostFn::Table(SetFunction::FromTable(1, {Rat(0), Rat(2)}));
  EXPECT_FALSE(c.is_approximation());
  EXPECT_TRUE(c.WithApproximationError(Rat(1, 100)).is_approximation());
}

TEST(CatalogTest, TightCostValues) {
  const CostFn c = TightCost(3, Rat(6));
  EXPECT_EQ(c.Eval(PlayerSet{0}), Rat(6));
  EXPECT_EQ(c.Eval(PlayerSet{1}), Rat(3));
  EXPECT_EQ(c.Eval(PlayerSet{2}), Rat(2));
  EXPECT_EQ(c.Eval(PlayerSet{1, 2}), Rat(5));
  EXPECT_EQ(c.Eval(PlayerSet::Full(3)), Rat(6));
}

TEST(CatalogTest, StepAndSubadditivityExample) {
  const CostFn step = StepCost(4);
  EXPECT_EQ(step.Eval(PlayerSet{0, 1}), Rat(1));
  EXPECT_EQ(step.Eval(PlayerSet{0, 1, 2}), Rat(3));
  const ClassFlags flags = CheckCostClass(SubadditivityExampleCost());
  EXPECT_FALSE(flags.symmetric);
  EXPECT_FALSE(flags.submodular);
  EXPECT_EQ(flags.subadditive, true);
}

TEST(CatalogTest, IntersectionCostIsFlaggedApproximation) {
  const CostFn c = IntersectionCost(9);
  EXPECT_TRUE(c.is_approximation());
  EXPECT_EQ(c.Eval(PlayerSet{8}), Rat(3));
  EXPECT_EQ(c.Eval(PlayerSet{0, 3}), Rat(2));
  EXPECT_EQ(c.Eval(PlayerSet{1}), Rat(1414213, 1000000));
}

TEST(CatalogTest, CheckCostClassSizeLimit) {
  // Non-monotone beyond 12 players: subadditivity is undecided.
  std::vector<Rat> values(size_t{1} << 13, Rat(1));
  values[0] = 0;
  values[3] = 0;
  EXPECT_THROW(CheckCostClass(SetFunction::FromTable(
                   13, values, SetFunctionRole::kCost)),
               SizeLimitError);
}

}  // namespace
}  // namespace costshare
