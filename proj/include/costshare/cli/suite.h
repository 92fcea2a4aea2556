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

#ifndef COSTSHARE_CLI_SUITE_H_
#define COSTSHARE_CLI_SUITE_H_

#include <string>
#include <string_view>
#include <vector>

#include "costshare/cli/report_file.h"

namespace costshare {

// A suite config is a JSON object with a "suites" array; each entry names
// a suite and optionally overrides its defaults:
//
//   {"suites": [
//     {"name": "corollary-adm", "count": 20, "seed": 1,
//      "max_players": 5, "max_items": 3},
//     {"name": "thm-appl-vc", "count": 10, "seed": 2},
//     {"name": "directory", "path": "instances", "mechanism": "sm"}
//   ]}
//
// Suites:
//   corollary-adm      IACSM, symmetric submodular costs and valuations:
//                      budget ratio 1 and approx ratio <= H_n.
//   thm-alpha-bb       IACSM on step and random tables: C(A) <= sum p <=
//                      alpha C(A) and approx ratio <= 2 alpha^3 H_n.
//   thm-appl-sc        SM on set cover (max set size d): alpha_max <= d.
//   thm-appl-vc        SM on vertex cover (max degree k): alpha_max <= k.
//   thm-appl-matching  SM on matching: alpha_max <= k (bipartite) or
//                      (5k+3)/4; all three also check approx <= alpha_max.
//   prop-tight         SM on the tight instances for eps = 1/10^t:
//                      nobody served, approx >= (k H_n - n eps) / k.
//   ns-sm              SM on built-in allocation costs: budget ratio 1 and
//                      approx <= alpha_min H_n.
//   directory          every *.inst file under "path" with "mechanism":
//                      invariant flags and cost recovery.
//
// Relative paths resolve against `base_dir`. An empty document or empty
// "suites" array yields no rows.
struct SuiteResult {
  std::vector<ReportRow> rows;
  int failures = 0;
};

SuiteResult RunSuiteConfig(std::string_view config_text,
                           const std::string& base_dir = ".",
                           bool record_timing = true);

std::vector<std::string> SuiteNames();

}  // namespace costshare

#endif  // COSTSHARE_CLI_SUITE_H_
