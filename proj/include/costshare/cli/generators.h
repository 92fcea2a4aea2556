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

#ifndef COSTSHARE_CLI_GENERATORS_H_
#define COSTSHARE_CLI_GENERATORS_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "costshare/cli/instance_file.h"

namespace costshare {

// Instance generators. Every kind takes key=value parameters with the
// defaults shown and is a pure function of (kind, params, seed).
//
//   random-symmetric     n=3 m=2 cost=submodular|step|random-table
//                        cost_max=4 grid_step=1/2 grid_max=4
//   vertex-cover         graph=star|random k=3 vertices=5 edges=6 m=1
//   set-cover            n=6 sets=4 d=3 m=1
//   matching             graph=random|bipartite vertices=6 edges=7 m=1
//   paper-tight          n=3 k=6 eps=1/10
//   paper-intersection   n=4 value=2
//   paper-subadditivity  (three players, one item)
//
// Valuations not fixed by the construction are symmetric submodular with
// marginals drawn from {0, grid_step, ..., grid_max}.
struct GeneratorSpec {
  std::string kind;
  std::map<std::string, std::string> params;
  uint64_t seed = 0;
};

std::vector<std::string> GeneratorKinds();

// Throws PreconditionError on an unknown kind, unknown parameter or bad
// parameter value.
InstanceDoc Generate(const GeneratorSpec& spec);

// Splits "key=value" arguments; throws PreconditionError on malformed ones.
std::map<std::string, std::string> ParseParams(
    const std::vector<std::string>& args);

}  // namespace costshare

#endif  // COSTSHARE_CLI_GENERATORS_H_
