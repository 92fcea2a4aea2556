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

#ifndef COSTSHARE_CLI_INSTANCE_FILE_H_
#define COSTSHARE_CLI_INSTANCE_FILE_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "costshare/core/instance.h"
#include "costshare/costs/cost_fn.h"
#include "costshare/costs/nonseparable.h"
#include "costshare/valuations/valuation.h"

namespace costshare {

// Malformed instance or config text. Line and column are 1-based and point
// at the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Text form of an instance, one directive per line ('#' starts a comment):
//
//   costshare-instance 1
//   players 2
//   items 1
//   valuation 0 symmetric 3/1
//   valuation 1 table 0/1 1/2
//   cost 0 table 0/1 2/1 2/1 2/1
//   cost 1 set-cover {0,1} {1}
//   cost 2 vertex-cover 4 0-1 0-2 0-3
//   cost 3 matching 4 0-1 1-2
//   allocation-cost shared-setup 3/1 1/2
//
// Table values are listed by bitmask (player or item 0 is the lowest bit).
// A table cost may end with "approx <error>" to mark rounded values. Graph
// costs give the vertex count, then one player per edge. Without an
// allocation-cost line every item needs a cost line; with one, cost lines
// are required for lifted-separable and forbidden otherwise.
struct InstanceDoc {
  int num_players = 0;
  int num_items = 0;
  std::vector<ValuationFn> valuations;
  std::vector<CostFn> item_costs;
  std::optional<NonSeparableSpec> allocation_cost;

  Instance Build() const;
};

bool SameCost(const CostFn& a, const CostFn& b);
bool operator==(const InstanceDoc& a, const InstanceDoc& b);

InstanceDoc ParseInstance(std::string_view text);
std::string SerializeInstance(const InstanceDoc& doc);

// File wrappers; I/O failures throw std::runtime_error.
InstanceDoc ReadInstanceFile(const std::string& path);
void WriteInstanceFile(const std::string& path, const InstanceDoc& doc);

// Reads a whole file into a string.
std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, std::string_view text);

}  // namespace costshare

#endif  // COSTSHARE_CLI_INSTANCE_FILE_H_
