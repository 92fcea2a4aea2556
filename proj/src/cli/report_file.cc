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

#include "costshare/cli/report_file.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace costshare {
namespace {

std::string FormatFlag(const std::optional<bool>& flag) {
  if (!flag) return "n/a";
  return *flag ? "true" : "false";
}

// Quotes a field when it contains a separator or quote.
std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string JoinRats(const std::vector<Rat>& values) {
  std::string out;
  for (size_t k = 0; k < values.size(); ++k) {
    if (k) out += " ";
    out += values[k].ToString();
  }
  return out;
}

}  // namespace

const std::vector<std::string>& ReportHeader() {
  static const auto* header = new std::vector<std::string>{
      "instance_id",      "mechanism",        "n",
      "m",                "allocation_cost",  "total_payment",
      "budget_ratio",     "social_cost",      "optimal_social_cost",
      "approx_ratio",     "alpha_avg_decreasing", "alpha_min_bounded",
      "alpha_max_bounded", "p1",              "p2",
      "final_set",        "ir",               "npt",
      "check",            "wall_time_ms"};
  return *header;
}

std::string ReportHeaderLine() {
  std::string out;
  for (const std::string& h : ReportHeader()) {
    if (!out.empty()) out += ",";
    out += h;
  }
  return out;
}

std::string FormatRatio(const std::optional<Rat>& ratio) {
  return ratio ? ratio->ToString() : "inf";
}

std::string FormatAlpha(const std::optional<AlphaReport>& alpha) {
  if (!alpha) return "n/a";
  return alpha->unbounded() ? "inf" : alpha->ToString();
}

std::string FormatReportRow(const ReportRow& row) {
  const RunReport& r = row.run;
  char wall[32];
  std::snprintf(wall, sizeof(wall), "%.3f", row.wall_time_ms);
  const std::vector<std::string> fields = {
      row.instance_id,
      std::string(MechanismName(r.mechanism)),
      std::to_string(row.num_players),
      std::to_string(row.num_items),
      r.allocation_cost.ToString(),
      r.total_payment.ToString(),
      FormatRatio(r.budget_ratio),
      r.social_cost.ToString(),
      r.optimal_social_cost.ToString(),
      FormatRatio(r.approx_ratio),
      FormatAlpha(row.alphas.average_decreasing),
      FormatAlpha(row.alphas.min_bounded),
      FormatAlpha(row.alphas.max_bounded),
      FormatFlag(r.flags.trace_monotone),
      FormatFlag(r.flags.refinement),
      FormatFlag(r.flags.final_set_structure),
      FormatFlag(r.flags.individually_rational),
      FormatFlag(r.flags.no_positive_transfers),
      row.check,
      wall,
  };
  std::string out;
  for (size_t k = 0; k < fields.size(); ++k) {
    if (k) out += ",";
    out += CsvField(fields[k]);
  }
  return out;
}

std::string FormatReport(std::vector<ReportRow> rows) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ReportRow& a, const ReportRow& b) {
                     return a.instance_id < b.instance_id;
                   });
  std::string out = ReportHeaderLine() + "\n";
  for (const ReportRow& row : rows) out += FormatReportRow(row) + "\n";
  return out;
}

std::string FormatTrace(const Trace& trace) {
  std::ostringstream out;
  for (size_t t = 0; t < trace.order.size(); ++t) {
    out << "iteration " << t << ": finalize player " << trace.order[t]
        << " bundle " << trace.bundle_history[t].ToString() << "\n";
    for (size_t j = 0; j < trace.share_history.size(); ++j) {
      out << "  item " << j << " share " << trace.share_history[j][t].ToString()
          << "\n";
    }
  }
  for (size_t j = 0; j < trace.share_history.size(); ++j) {
    out << "item " << j << " final share "
        << trace.share_history[j].back().ToString() << "; shares "
        << JoinRats(trace.share_history[j]) << "; withdrawals";
    for (int i : trace.withdrawals[j]) out << " " << i;
    out << "\n";
  }
  return out.str();
}

}  // namespace costshare
