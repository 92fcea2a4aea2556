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

#ifndef COSTSHARE_CORE_SET_FUNCTION_H_
#define COSTSHARE_CORE_SET_FUNCTION_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "costshare/core/rational.h"
#include "costshare/core/subset.h"

namespace costshare {

// Cost and valuation roles require f(empty) = 0 and non-negative values.
enum class SetFunctionRole { kGeneric, kCost, kValuation };

// Dense tables are capped at this ground size.
inline constexpr int kMaxTableGroundSize = kMaxGroundSize;
inline constexpr size_t kDefaultOracleCacheCap = size_t{1} << 20;

// A function from subsets of a ground set {0..k-1} to exact rationals.
//
// Backed either by a dense table of 2^k values (indexed by bitmask) or by an
// evaluation callback whose results are memoized up to a cache cap. Copies
// share the same immutable backing; the memo cache is guarded by a mutex,
// so a SetFunction may be evaluated concurrently from several threads.
class SetFunction {
 public:
  using Oracle = std::function<Rat(uint32_t)>;

  SetFunction();  // ground size 0, f(empty) = 0

  static SetFunction FromTable(int ground_size, std::vector<Rat> values,
                               SetFunctionRole role = SetFunctionRole::kGeneric);
  static SetFunction FromOracle(int ground_size, Oracle oracle,
                                SetFunctionRole role = SetFunctionRole::kGeneric,
                                size_t cache_cap = kDefaultOracleCacheCap);

  int ground_size() const;
  SetFunctionRole role() const;
  bool is_table() const;

  Rat operator()(uint32_t mask) const;
  template <typename Tag>
  Rat operator()(Subset<Tag> s) const {
    return (*this)(s.bits());
  }

  // All 2^k values in mask order. Evaluates the oracle everywhere.
  std::vector<Rat> ToTable() const;
  // Table-backed copy with identical values.
  SetFunction Materialize() const;

  // Number of memoized oracle entries (0 for tables).
  size_t cached_entries() const;

 private:
  struct Impl;
  explicit SetFunction(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

// Membership verdicts for the function classes of interest. Each flag is
// decided by checking its defining quantifier over the whole ground set.
struct ClassFlags {
  bool nondecreasing = false;
  bool submodular = false;
  bool symmetric = false;
  bool xos_symmetric = false;
  // Empty when the ground set is beyond the pairwise-check limit.
  std::optional<bool> subadditive;
};

// Subadditivity is checked over disjoint pairs (3^k) when f is
// non-decreasing, otherwise over all pairs (4^k).
inline constexpr int kMaxSubadditiveMonotoneGround = 16;
inline constexpr int kMaxSubadditiveGeneralGround = 12;

ClassFlags Classify(const SetFunction& f);

// Throws PreconditionError unless f(empty) = 0 and every value is >= 0.
void ValidateNormalized(const SetFunction& f, const char* what);

}  // namespace costshare

#endif  // COSTSHARE_CORE_SET_FUNCTION_H_
