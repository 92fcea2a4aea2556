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

#include <bit>
#include <vector>

#include "costshare/core/error.h"

namespace costshare {
namespace {

// Running maximum over convention ratios; unbounded dominates everything and
// the first maximiser seen is kept.
class MaxRatio {
 public:
  // Returns true when the candidate became the new maximum.
  bool Offer(const std::optional<Rat>& ratio) {
    if (unbounded_) return false;
    if (!ratio) {
      unbounded_ = true;
      return true;
    }
    if (!seen_ || best_ < *ratio) {
      best_ = *ratio;
      seen_ = true;
      return true;
    }
    return false;
  }
  bool unbounded() const { return unbounded_; }

  // The clamp alpha >= 1 mirrors "there exists some alpha >= 1".
  std::optional<Rat> Alpha() const {
    if (unbounded_) return std::nullopt;
    return seen_ ? Max(best_, Rat(1)) : Rat(1);
  }

 private:
  bool unbounded_ = false;
  bool seen_ = false;
  Rat best_;
};

void CheckPlayers(const SetFunction& c, int limit, const char* what) {
  if (c.ground_size() > limit) {
    throw SizeLimitError(std::string(what) + " over " +
                             std::to_string(c.ground_size()) + " players",
                         limit);
  }
}

enum class Standalone { kMin, kMax };

AlphaReport BoundedEstimate(const SetFunction& c, Standalone which) {
  CheckPlayers(c, kMaxBoundedPlayers, "bounded-average estimator");
  const int n = c.ground_size();
  const uint32_t count = uint32_t{1} << n;
  std::vector<Rat> single(n);
  for (int j = 0; j < n; ++j) single[j] = c(PlayerSet::Single(j));

  // extreme[T] = index of the player with the min/max standalone cost in T,
  // lowest index on ties.
  std::vector<int> extreme(count, -1);
  MaxRatio best;
  AlphaReport report;
  for (uint32_t t = 1; t < count; ++t) {
    const int low = std::countr_zero(t);
    const int prev = extreme[t & (t - 1)];
    int pick = low;
    if (prev != -1) {
      const bool better = which == Standalone::kMin ? single[prev] <= single[low]
                                                    : single[prev] >= single[low];
      if (better) pick = prev;
    }
    extreme[t] = pick;
    const int size = std::popcount(t);
    if (best.Offer(ConventionRatio(single[pick] * size, c(t)))) {
      report.witness_superset = PlayerSet(t);
      report.witness_player = pick;
    }
    if (best.unbounded()) break;
  }
  report.alpha = best.Alpha();
  return report;
}

uint32_t BlockMask(int player, int m) {
  return ((uint32_t{1} << m) - 1) << (player * m);
}

Allocation Decode(uint32_t code, int n, int m) {
  std::vector<ItemSet> bundles(n);
  for (int i = 0; i < n; ++i) {
    bundles[i] = ItemSet((code >> (i * m)) & ((uint32_t{1} << m) - 1));
  }
  return Allocation(m, std::move(bundles));
}

uint32_t Encode(const Allocation& a) {
  uint32_t code = 0;
  for (int i = 0; i < a.num_players(); ++i) {
    code |= a.bundle(i).bits() << (i * a.num_items());
  }
  return code;
}

// Scans every T with |T| >= 2 for one allocation A given C on all
// restrictions of A.
template <typename CostOf>
void ScanAllocation(const Allocation& a, uint32_t code, int n, int m,
                    Standalone which, CostOf&& cost_of, MaxRatio& best,
                    AlphaReport& report) {
  std::vector<Rat> single(n);
  for (int j = 0; j < n; ++j) single[j] = cost_of(code & BlockMask(j, m));
  const uint32_t count = uint32_t{1} << n;
  std::vector<int> extreme(count, -1);
  for (uint32_t t = 1; t < count; ++t) {
    const int low = std::countr_zero(t);
    const int prev = extreme[t & (t - 1)];
    int pick = low;
    if (prev != -1) {
      const bool better = which == Standalone::kMin ? single[prev] <= single[low]
                                                    : single[prev] >= single[low];
      if (better) pick = prev;
    }
    extreme[t] = pick;
    const int size = std::popcount(t);
    if (size < 2) continue;
    uint32_t restricted = 0;
    for (int i : PlayerSet(t).Elements()) restricted |= code & BlockMask(i, m);
    if (best.Offer(ConventionRatio(single[pick] * size, cost_of(restricted)))) {
      report.witness_superset = PlayerSet(t);
      report.witness_player = pick;
      report.witness_allocation = a;
    }
    if (best.unbounded()) return;
  }
}

AlphaReport BoundedNsExhaustive(const AllocationCostFn& c, Standalone which) {
  const int n = c.num_players();
  const int m = c.num_items();
  if (n * m > kMaxExhaustiveAllocationBits) {
    throw SizeLimitError("exhaustive non-separable estimator with n*m = " +
                             std::to_string(n * m),
                         kMaxExhaustiveAllocationBits);
  }
  const uint32_t codes = uint32_t{1} << (n * m);
  std::vector<Rat> table(codes);
  for (uint32_t code = 0; code < codes; ++code) {
    table[code] = c(Decode(code, n, m));
  }
  MaxRatio best;
  AlphaReport report;
  for (uint32_t code = 0; code < codes && !best.unbounded(); ++code) {
    ScanAllocation(
        Decode(code, n, m), code, n, m, which,
        [&](uint32_t sub) { return table[sub]; }, best, report);
  }
  report.alpha = best.Alpha();
  return report;
}

AlphaReport BoundedNsSampled(const AllocationCostFn& c,
                             std::span<const Allocation> sample,
                             Standalone which) {
  const int n = c.num_players();
  const int m = c.num_items();
  if (n * m > 32) {
    throw SizeLimitError("sampled non-separable estimator needs n*m <= 32", 32);
  }
  MaxRatio best;
  AlphaReport report;
  for (const Allocation& a : sample) {
    if (best.unbounded()) break;
    ScanAllocation(
        a, Encode(a), n, m, which,
        [&](uint32_t sub) { return c(Decode(sub, n, m)); }, best, report);
  }
  report.alpha = best.Alpha();
  report.lower_bound = true;
  return report;
}

}  // namespace

std::string AlphaReport::ToString() const {
  std::string s = lower_bound ? ">=" : "";
  return s + (alpha ? alpha->ToString() : "unbounded");
}

std::optional<Rat> ConventionRatio(const Rat& numerator,
                                   const Rat& denominator) {
  if (denominator.is_zero()) {
    if (numerator.is_zero()) return Rat(1);
    return std::nullopt;
  }
  return numerator / denominator;
}

AlphaReport AlphaAverageDecreasing(const SetFunction& c) {
  CheckPlayers(c, kMaxAverageDecreasingPlayers, "average-decreasing estimator");
  const int n = c.ground_size();
  const uint32_t count = uint32_t{1} << n;
  std::vector<Rat> average(count);
  // cheapest[T]: nonempty S subset of T with the least average, first found.
  std::vector<uint32_t> cheapest(count, 0);
  MaxRatio best;
  AlphaReport report;
  for (uint32_t t = 1; t < count; ++t) {
    average[t] = c(t) / std::popcount(t);
    uint32_t pick = t;
    for (uint32_t rest = t; rest != 0; rest &= rest - 1) {
      const uint32_t sub = t & ~(rest & (~rest + 1));
      if (sub != 0 && average[cheapest[sub]] < average[pick]) {
        pick = cheapest[sub];
      }
    }
    cheapest[t] = pick;
    if (best.Offer(ConventionRatio(average[t], average[pick]))) {
      report.witness_subset = PlayerSet(pick);
      report.witness_superset = PlayerSet(t);
    }
    if (best.unbounded()) break;
  }
  report.alpha = best.Alpha();
  return report;
}

AlphaReport AlphaMinBounded(const SetFunction& c) {
  return BoundedEstimate(c, Standalone::kMin);
}

AlphaReport AlphaMaxBounded(const SetFunction& c) {
  return BoundedEstimate(c, Standalone::kMax);
}

AlphaReport AlphaMinBoundedNs(const AllocationCostFn& c) {
  return BoundedNsExhaustive(c, Standalone::kMin);
}

AlphaReport AlphaMaxBoundedNs(const AllocationCostFn& c) {
  return BoundedNsExhaustive(c, Standalone::kMax);
}

AlphaReport AlphaMinBoundedNs(const AllocationCostFn& c,
                              std::span<const Allocation> sample) {
  return BoundedNsSampled(c, sample, Standalone::kMin);
}

AlphaReport AlphaMaxBoundedNs(const AllocationCostFn& c,
                              std::span<const Allocation> sample) {
  return BoundedNsSampled(c, sample, Standalone::kMax);
}

}  // namespace costshare
