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

#include "costshare/analysis/social_cost.h"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "costshare/core/error.h"

namespace costshare {
namespace {

constexpr int64_t kMaxCountStates = int64_t{1} << 20;

Rat FullValue(const Instance& instance) {
  Rat total;
  const ItemSet all = ItemSet::Full(instance.num_items());
  for (const ValuationFn& v : instance.valuations()) total += v.Value(all);
  return total;
}

std::vector<std::vector<Rat>> ItemCostTables(const Instance& instance) {
  std::vector<std::vector<Rat>> tables;
  const uint32_t size = uint32_t{1} << instance.num_players();
  for (const SetFunction& c : instance.item_costs()) {
    std::vector<Rat>& t = tables.emplace_back(size);
    for (uint32_t s = 0; s < size; ++s) t[s] = c(s);
  }
  return tables;
}

// Depth-first enumeration over served sets, item 0 outermost so that leaves
// are visited in increasing (T_1, ..., T_m) order.
class Enumerator {
 public:
  explicit Enumerator(const Instance& instance)
      : instance_(instance),
        n_(instance.num_players()),
        m_(instance.num_items()),
        served_(m_),
        full_value_(FullValue(instance)) {
    const uint32_t bundles = uint32_t{1} << m_;
    player_values_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      player_values_[i].resize(bundles);
      for (uint32_t b = 0; b < bundles; ++b) {
        player_values_[i][b] = instance.valuation(i).Value(ItemSet(b));
      }
    }
    if (instance.is_separable()) cost_tables_ = ItemCostTables(instance);
  }

  Optimum Run() {
    Visit(0, Rat());
    return Optimum{*best_, Allocation::FromServed(n_, best_served_)};
  }

 private:
  void Visit(int item, const Rat& partial_cost) {
    if (item == m_) {
      Leaf(partial_cost);
      return;
    }
    const uint32_t sets = uint32_t{1} << n_;
    for (uint32_t t = 0; t < sets; ++t) {
      served_[item] = PlayerSet(t);
      Visit(item + 1, cost_tables_.empty()
                          ? partial_cost
                          : partial_cost + cost_tables_[item][t]);
    }
  }

  void Leaf(const Rat& separable_cost) {
    std::vector<uint32_t> bundles(n_, 0);
    for (int j = 0; j < m_; ++j) {
      for (int i : served_[j].Elements()) bundles[i] |= uint32_t{1} << j;
    }
    Rat value = full_value_;
    for (int i = 0; i < n_; ++i) value -= player_values_[i][bundles[i]];
    Rat total = value;
    if (cost_tables_.empty()) {
      total += AllocationCost(instance_, Allocation::FromServed(n_, served_));
    } else {
      total += separable_cost;
    }
    if (!best_ || total < *best_) {
      best_ = total;
      best_served_ = served_;
    }
  }

  const Instance& instance_;
  int n_;
  int m_;
  std::vector<PlayerSet> served_;
  Rat full_value_;
  std::vector<std::vector<Rat>> player_values_;
  std::vector<std::vector<Rat>> cost_tables_;
  std::optional<Rat> best_;
  std::vector<PlayerSet> best_served_;
};

class CountsProgram {
 public:
  explicit CountsProgram(const Instance& instance)
      : n_(instance.num_players()),
        m_(instance.num_items()),
        cost_tables_(ItemCostTables(instance)) {
    int64_t states = 1;
    for (int i = 0; i < n_; ++i) {
      weights_.push_back(states);
      states *= m_ + 1;
    }
    num_states_ = states;
    shortfall_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      const SymmetricSubmodularValuation& v = instance.valuation(i).symmetric();
      for (int k = 0; k <= m_; ++k) {
        shortfall_[i].push_back(v.ValueOfCount(m_) - v.ValueOfCount(k));
      }
    }
    const uint32_t sets = uint32_t{1} << n_;
    step_.resize(sets);
    for (uint32_t t = 0; t < sets; ++t) {
      for (int i : PlayerSet(t).Elements()) step_[t] += weights_[i];
    }
    memo_.assign(m_ + 1, std::vector<std::optional<Rat>>(num_states_));
  }

  Optimum Run() {
    const Rat best = CostToGo(0, 0);
    std::vector<PlayerSet> served(m_);
    int64_t state = 0;
    Rat remaining = best;
    for (int j = 0; j < m_; ++j) {
      const uint32_t sets = uint32_t{1} << n_;
      for (uint32_t t = 0; t < sets; ++t) {
        const Rat candidate =
            cost_tables_[j][t] + CostToGo(j + 1, state + step_[t]);
        if (candidate == remaining) {
          served[j] = PlayerSet(t);
          state += step_[t];
          remaining -= cost_tables_[j][t];
          break;
        }
      }
    }
    return Optimum{best, Allocation::FromServed(n_, std::move(served))};
  }

 private:
  Rat CostToGo(int item, int64_t state) {
    std::optional<Rat>& slot = memo_[item][state];
    if (slot) return *slot;
    Rat best;
    if (item == m_) {
      int64_t rest = state;
      for (int i = 0; i < n_; ++i) {
        best += shortfall_[i][rest % (m_ + 1)];
        rest /= m_ + 1;
      }
    } else {
      const uint32_t sets = uint32_t{1} << n_;
      for (uint32_t t = 0; t < sets; ++t) {
        const Rat candidate =
            cost_tables_[item][t] + CostToGo(item + 1, state + step_[t]);
        if (t == 0 || candidate < best) best = candidate;
      }
    }
    slot = best;
    return best;
  }

  int n_;
  int m_;
  std::vector<std::vector<Rat>> cost_tables_;
  std::vector<int64_t> weights_;
  int64_t num_states_ = 0;
  std::vector<std::vector<Rat>> shortfall_;
  std::vector<int64_t> step_;
  std::vector<std::vector<std::optional<Rat>>> memo_;
};

}  // namespace

Rat SocialCost(const Instance& instance, const Allocation& a) {
  if (a.num_players() != instance.num_players() ||
      a.num_items() != instance.num_items()) {
    throw PreconditionError("allocation dimensions do not match the instance");
  }
  Rat total = AllocationCost(instance, a);
  const ItemSet all = ItemSet::Full(instance.num_items());
  for (int i = 0; i < instance.num_players(); ++i) {
    const ValuationFn& v = instance.valuation(i);
    total += v.Value(all) - v.Value(a.bundle(i));
  }
  return total;
}

Optimum OptimalSocialCostExhaustive(const Instance& instance) {
  const int bits = instance.num_players() * instance.num_items();
  if (bits > kMaxExhaustiveBits) {
    throw SizeLimitError("exhaustive optimum needs n*m <= 20", kMaxExhaustiveBits);
  }
  return Enumerator(instance).Run();
}

bool CountsProgramApplies(const Instance& instance) {
  if (!instance.is_separable() || !instance.AllValuationsSymmetric()) {
    return false;
  }
  if (instance.num_players() > kMaxGroundSize) return false;
  int64_t states = 1;
  for (int i = 0; i < instance.num_players(); ++i) {
    states *= instance.num_items() + 1;
    if (states > kMaxCountStates) return false;
  }
  return true;
}

Optimum OptimalSocialCostByCounts(const Instance& instance) {
  if (!CountsProgramApplies(instance)) {
    throw SizeLimitError(
        "counts program needs separable costs, symmetric valuations and "
        "(m+1)^n <= 2^20",
        static_cast<int>(kMaxCountStates));
  }
  return CountsProgram(instance).Run();
}

Optimum OptimalSocialCost(const Instance& instance) {
  if (CountsProgramApplies(instance)) return OptimalSocialCostByCounts(instance);
  return OptimalSocialCostExhaustive(instance);
}

}  // namespace costshare
