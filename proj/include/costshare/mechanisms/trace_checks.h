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

#ifndef COSTSHARE_MECHANISMS_TRACE_CHECKS_H_
#define COSTSHARE_MECHANISMS_TRACE_CHECKS_H_

#include "costshare/core/instance.h"

namespace costshare {

// Every item's share history is non-decreasing.
bool VerifyTraceMonotone(const Trace& trace);

// Bundles are nested along the finalization order: A_{t} subset of A_{t+1}.
bool VerifyRefinement(const Outcome& outcome, const Trace& trace);

// For each served item, the players holding it are exactly the suffix of
// the finalization order starting at its first holder.
bool VerifyFinalSetStructure(const Outcome& outcome, const Trace& trace);

// Every recorded share equals the maximum-average recomputation over the
// item's withdrawal prefix at that point.
bool VerifySharesMatchRecomputation(const Instance& instance,
                                    const Trace& trace);

}  // namespace costshare

#endif  // COSTSHARE_MECHANISMS_TRACE_CHECKS_H_
