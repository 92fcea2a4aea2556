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

#include "costshare/costs/catalog.h"

#include <cmath>
#include <utility>

#include "costshare/core/error.h"

namespace costshare {
namespace {

template <typename Fn>
SetFunction Tabulate(int n, Fn&& fn) {
  if (n < 1 || n > kMaxTableGroundSize) {
    throw SizeLimitError("cost table size", kMaxTableGroundSize);
  }
  std::vector<Rat> values(size_t{1} << n);
  for (uint32_t s = 1; s < values.size(); ++s) values[s] = fn(PlayerSet(s));
  return SetFunction::FromTable(n, std::move(values), SetFunctionRole::kCost);
}

}  // namespace

CostFn SubadditivityExampleCost() {
  std::vector<Rat> values = {0, 5, 7, 10, 8, 9, 9, 11};
  return CostFn::Table(
      SetFunction::FromTable(3, std::move(values), SetFunctionRole::kCost),
      "subadditivity-example");
}

CostFn StepCost(int n) {
  return CostFn::Table(Tabulate(n,
                                [](PlayerSet s) {
                                  return s.size() >= 3 ? Rat(3) : Rat(1);
                                }),
                       "step");
}

CostFn TightCost(int n, const Rat& k) {
  if (k.sign() < 0) throw PreconditionError("TightCost: k must be >= 0");
  return CostFn::Table(Tabulate(n,
                                [&k](PlayerSet s) {
                                  Rat sum;
                                  for (int j : s.Elements()) sum += k / (j + 1);
                                  return Min(k, sum);
                                }),
                       "tight");
}

CostFn IntersectionCost(int n) {
  std::vector<Rat> root(n);
  for (int j = 0; j < n; ++j) {
    root[j] = Rat::FloorWithDenominator(std::sqrt(static_cast<double>(j + 1)),
                                        kSqrtDenominator);
  }
  CostFn c = CostFn::Table(Tabulate(n,
                                    [&root](PlayerSet s) {
                                      Rat best;
                                      for (int j : s.Elements()) {
                                        best = Max(best, root[j]);
                                      }
                                      return best;
                                    }),
                           "intersection");
  return c.WithApproximationError(Rat(1, kSqrtDenominator));
}

CostFn PublicGoodCost(int n, const Rat& k) {
  return CostFn::Table(Tabulate(n, [&k](PlayerSet) { return k; }),
                       "public-good");
}

CostFn AdditiveCost(const std::vector<Rat>& weights) {
  return CostFn::Table(Tabulate(static_cast<int>(weights.size()),
                                [&weights](PlayerSet s) {
                                  Rat sum;
                                  for (int j : s.Elements()) sum += weights[j];
                                  return sum;
                                }),
                       "additive");
}

CostFn SymmetricCost(const std::vector<Rat>& marginals) {
  std::vector<Rat> values(marginals.size() + 1);
  for (size_t t = 0; t < marginals.size(); ++t) {
    values[t + 1] = values[t] + marginals[t];
  }
  return CardinalityCost(values, "symmetric");
}

CostFn CardinalityCost(const std::vector<Rat>& values, std::string name) {
  if (values.empty() || !values[0].is_zero()) {
    throw PreconditionError("cardinality cost must start with c(empty) = 0");
  }
  const int n = static_cast<int>(values.size()) - 1;
  return CostFn::Table(
      Tabulate(n, [&values](PlayerSet s) { return values[s.size()]; }),
      std::move(name));
}

std::vector<NamedCost> CatalogCosts(int n, const Rat& k) {
  std::vector<NamedCost> out;
  out.push_back({"subadditivity-example", SubadditivityExampleCost()});
  out.push_back({"step", StepCost(n)});
  out.push_back({"tight", TightCost(n, k)});
  out.push_back({"intersection", IntersectionCost(n)});
  return out;
}

}  // namespace costshare
