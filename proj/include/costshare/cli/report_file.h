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

#ifndef COSTSHARE_CLI_REPORT_FILE_H_
#define COSTSHARE_CLI_REPORT_FILE_H_

#include <optional>
#include <string>
#include <vector>

#include "costshare/analysis/evaluate.h"
#include "costshare/core/instance.h"

namespace costshare {

// One CSV row per evaluated instance. Rationals print as "p/q", unbounded
// ratios as "inf", absent values as "n/a".
struct ReportRow {
  std::string instance_id;
  int num_players = 0;
  int num_items = 0;
  RunReport run;
  InstanceAlphas alphas;
  // Suite verdict for the row ("pass" or "fail: <reason>"); empty for
  // plain runs.
  std::string check;
  double wall_time_ms = 0;
};

const std::vector<std::string>& ReportHeader();
std::string ReportHeaderLine();
std::string FormatReportRow(const ReportRow& row);

// Header plus rows sorted by instance id.
std::string FormatReport(std::vector<ReportRow> rows);

std::string FormatRatio(const std::optional<Rat>& ratio);
std::string FormatAlpha(const std::optional<AlphaReport>& alpha);

// Human-readable dump of an iterative run: per iteration the finalized
// player, bundle and current shares, then the withdrawals per item.
std::string FormatTrace(const Trace& trace);

}  // namespace costshare

#endif  // COSTSHARE_CLI_REPORT_FILE_H_
