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

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <utility>

#include "costshare/core/error.h"

namespace costshare {

SymmetricSubmodularValuation::SymmetricSubmodularValuation(
    std::vector<Rat> marginals)
    : marginals_(std::move(marginals)) {
  if (marginals_.size() > static_cast<size_t>(kMaxGroundSize)) {
    throw SizeLimitError("too many items for a valuation", kMaxGroundSize);
  }
  prefix_.reserve(marginals_.size() + 1);
  prefix_.push_back(Rat(0));
  for (size_t t = 0; t < marginals_.size(); ++t) {
    if (marginals_[t].sign() < 0) {
      throw PreconditionError("symmetric submodular valuation: negative marginal");
    }
    if (t > 0 && marginals_[t - 1] < marginals_[t]) {
      throw PreconditionError(
          "symmetric submodular valuation: marginals must be non-increasing");
    }
    prefix_.push_back(prefix_.back() + marginals_[t]);
  }
}

TableValuation::TableValuation(SetFunction table) : table_(std::move(table)) {
  // Re-check here: a generic-role table would otherwise slip through.
  ValidateNormalized(table_, "table valuation");
}

ValuationFn::ValuationFn(SymmetricSubmodularValuation v) : rep_(std::move(v)) {}
ValuationFn::ValuationFn(TableValuation v) : rep_(std::move(v)) {}

int ValuationFn::num_items() const {
  return std::visit([](const auto& v) { return v.num_items(); }, rep_);
}

Rat ValuationFn::Value(ItemSet s) const {
  return std::visit([s](const auto& v) { return v.Value(s); }, rep_);
}

SetFunction ValuationFn::AsSetFunction() const {
  if (!is_symmetric()) return table().table();
  const int m = num_items();
  std::vector<Rat> values(size_t{1} << m);
  for (uint32_t s = 0; s < values.size(); ++s) {
    values[s] = symmetric().Value(ItemSet(s));
  }
  return SetFunction::FromTable(m, std::move(values),
                                SetFunctionRole::kValuation);
}

std::string ValuationFn::ToString() const {
  std::string out;
  if (is_symmetric()) {
    out = "symmetric";
    for (const Rat& d : symmetric().marginals()) out += " " + d.ToString();
  } else {
    out = "table";
    for (const Rat& value : table().table().ToTable()) {
      out += " " + value.ToString();
    }
  }
  return out;
}

bool operator==(const ValuationFn& a, const ValuationFn& b) {
  if (a.is_symmetric() != b.is_symmetric()) return false;
  if (a.is_symmetric()) return a.symmetric() == b.symmetric();
  return a.table().table().ToTable() == b.table().table().ToTable();
}

ClassFlags CheckClass(const TableValuation& v) { return Classify(v.table()); }

SymmetricSubmodularValuation GenSymmetricSubmodular(int m,
                                                    std::span<const Rat> grid,
                                                    uint64_t seed) {
  if (grid.empty()) throw PreconditionError("marginal grid is empty");
  for (const Rat& g : grid) {
    if (g.sign() < 0) throw PreconditionError("marginal grid has a negative value");
  }
  std::mt19937_64 rng(seed);
  std::vector<Rat> marginals(m);
  for (Rat& d : marginals) d = grid[rng() % grid.size()];
  std::sort(marginals.begin(), marginals.end(), std::greater<>());
  return SymmetricSubmodularValuation(std::move(marginals));
}

std::vector<SymmetricSubmodularValuation> EnumerateSymmetricSubmodular(
    int m, std::span<const Rat> grid) {
  // Distinct grid values, largest first, so index sequences that never
  // decrease are exactly the non-increasing marginal sequences.
  std::set<Rat, std::greater<>> distinct(grid.begin(), grid.end());
  std::vector<Rat> values(distinct.begin(), distinct.end());
  std::vector<SymmetricSubmodularValuation> out;
  std::vector<Rat> current;
  std::function<void(size_t)> rec = [&](size_t from) {
    if (static_cast<int>(current.size()) == m) {
      out.emplace_back(current);
      return;
    }
    for (size_t k = from; k < values.size(); ++k) {
      current.push_back(values[k]);
      rec(k);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace costshare
