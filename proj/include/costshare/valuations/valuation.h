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

#ifndef COSTSHARE_VALUATIONS_VALUATION_H_
#define COSTSHARE_VALUATIONS_VALUATION_H_

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "costshare/core/rational.h"
#include "costshare/core/set_function.h"
#include "costshare/core/subset.h"

namespace costshare {

// v(S) = delta_1 + ... + delta_|S| with delta_1 >= delta_2 >= ... >= 0.
class SymmetricSubmodularValuation {
 public:
  // Throws PreconditionError unless the marginals are non-increasing and
  // non-negative.
  explicit SymmetricSubmodularValuation(std::vector<Rat> marginals);

  int num_items() const { return static_cast<int>(marginals_.size()); }
  const std::vector<Rat>& marginals() const { return marginals_; }

  // Value of any bundle with the given number of items.
  Rat ValueOfCount(int count) const { return prefix_[count]; }
  Rat Value(ItemSet s) const { return prefix_[s.size()]; }

  friend bool operator==(const SymmetricSubmodularValuation& a,
                         const SymmetricSubmodularValuation& b) {
    return a.marginals_ == b.marginals_;
  }

 private:
  std::vector<Rat> marginals_;
  std::vector<Rat> prefix_;
};

// An explicit table over all 2^m bundles. Monotonicity is not required;
// v(empty) = 0 and non-negativity are.
class TableValuation {
 public:
  explicit TableValuation(SetFunction table);

  int num_items() const { return table_.ground_size(); }
  const SetFunction& table() const { return table_; }
  Rat Value(ItemSet s) const { return table_(s); }

 private:
  SetFunction table_;
};

// Either representation; evaluation is total on 2^M.
class ValuationFn {
 public:
  ValuationFn(SymmetricSubmodularValuation v);  // NOLINT
  ValuationFn(TableValuation v);                // NOLINT

  int num_items() const;
  Rat Value(ItemSet s) const;

  bool is_symmetric() const {
    return std::holds_alternative<SymmetricSubmodularValuation>(rep_);
  }
  const SymmetricSubmodularValuation& symmetric() const {
    return std::get<SymmetricSubmodularValuation>(rep_);
  }
  const TableValuation& table() const { return std::get<TableValuation>(rep_); }

  // The valuation as an explicit table over items.
  SetFunction AsSetFunction() const;

  // "symmetric 3/1 1/2" or "table 0/1 2/1 2/1 3/1" (values by bitmask).
  std::string ToString() const;

  // Same representation and same values.
  friend bool operator==(const ValuationFn& a, const ValuationFn& b);

 private:
  std::variant<SymmetricSubmodularValuation, TableValuation> rep_;
};

// Exhaustive class check of a table valuation (m <= 20).
ClassFlags CheckClass(const TableValuation& v);

// m marginals drawn uniformly from grid, sorted non-increasing.
// Deterministic for a given seed. Throws PreconditionError on an empty grid
// or negative grid values.
SymmetricSubmodularValuation GenSymmetricSubmodular(int m,
                                                    std::span<const Rat> grid,
                                                    uint64_t seed);

// Every non-increasing length-m sequence over grid, in lexicographic order
// of grid indices. Used as a misreport space.
std::vector<SymmetricSubmodularValuation> EnumerateSymmetricSubmodular(
    int m, std::span<const Rat> grid);

}  // namespace costshare

#endif  // COSTSHARE_VALUATIONS_VALUATION_H_
