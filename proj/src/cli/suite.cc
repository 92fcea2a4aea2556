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

#include "costshare/cli/suite.h"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <utility>

#include "costshare/cli/generators.h"
#include "costshare/cli/instance_file.h"
#include "costshare/core/error.h"
#include "costshare/costs/nonseparable.h"
#include "json.hpp"

namespace costshare {
namespace {

using nlohmann::json;

struct Context {
  std::string base_dir;
  bool record_timing;
  SuiteResult* result;
};

class Verdict {
 public:
  void Require(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::string ToString() const {
    if (failures_.empty()) return "pass";
    std::string out = "fail:";
    for (const std::string& f : failures_) out += " " + f + ";";
    out.pop_back();
    return out;
  }

 private:
  std::vector<std::string> failures_;
};

bool AtMost(const std::optional<Rat>& ratio, const std::optional<Rat>& bound) {
  if (!bound) return true;
  return ratio && *ratio <= *bound;
}

ReportRow Evaluate(const std::string& id, const InstanceDoc& doc,
                   const MechanismSpec& spec, bool record_timing) {
  const auto start = std::chrono::steady_clock::now();
  const Instance instance = doc.Build();
  ReportRow row;
  row.instance_id = id;
  row.num_players = doc.num_players;
  row.num_items = doc.num_items;
  row.run = EvaluateRun(instance, spec);
  row.alphas = ComputeInstanceAlphas(instance);
  if (record_timing) {
    row.wall_time_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  }
  return row;
}

void Record(Context& ctx, ReportRow row, const Verdict& verdict) {
  row.check = verdict.ToString();
  if (!verdict.ok()) ++ctx.result->failures;
  ctx.result->rows.push_back(std::move(row));
}

void CommonChecks(const ReportRow& row, Verdict& v) {
  v.Require(row.run.flags.AllHold(), "invariant flags");
  if (row.run.mechanism == MechanismKind::kSequential) {
    v.Require(row.run.budget_ratio == Rat(1), "budget balance");
  } else {
    v.Require(row.run.allocation_cost <= row.run.total_payment,
              "cost recovery");
  }
}

std::string RowId(const std::string& suite, int index) {
  std::string digits = std::to_string(index);
  return suite + "/" + std::string(digits.size() < 4 ? 4 - digits.size() : 0, '0') +
         digits;
}

int Get(const json& entry, const char* key, int fallback) {
  return entry.contains(key) ? entry.at(key).get<int>() : fallback;
}

int Between(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

const MechanismSpec kIacsm{MechanismKind::kIacsm, {}};
const MechanismSpec kSm{MechanismKind::kSequential, {}};

void AdmissibleBudget(const json& entry, Context& ctx) {
  const int count = Get(entry, "count", 20);
  const int max_n = Get(entry, "max_players", 5);
  const int max_m = Get(entry, "max_items", 3);
  std::mt19937_64 rng(Get(entry, "seed", 1));
  for (int k = 0; k < count; ++k) {
    const int n = Between(rng, 1, max_n);
    const int m = Between(rng, 1, max_m);
    const InstanceDoc doc = Generate({"random-symmetric",
                                      {{"n", std::to_string(n)},
                                       {"m", std::to_string(m)}},
                                      rng()});
    ReportRow row = Evaluate(RowId("corollary-adm", k), doc, kIacsm,
                             ctx.record_timing);
    Verdict v;
    CommonChecks(row, v);
    v.Require(row.run.budget_ratio == Rat(1), "budget ratio 1");
    v.Require(AtMost(row.run.approx_ratio, Harmonic(n)), "approx <= H_n");
    Record(ctx, std::move(row), v);
  }
}

void AlphaBudget(const json& entry, Context& ctx) {
  const int count = Get(entry, "count", 20);
  const int max_n = Get(entry, "max_players", 5);
  const int max_m = Get(entry, "max_items", 3);
  std::mt19937_64 rng(Get(entry, "seed", 1));
  for (int k = 0; k < count; ++k) {
    const int n = Between(rng, 1, max_n);
    const int m = Between(rng, 1, max_m);
    const InstanceDoc doc = Generate(
        {"random-symmetric",
         {{"n", std::to_string(n)},
          {"m", std::to_string(m)},
          {"cost", k % 2 == 0 ? "step" : "random-table"}},
         rng()});
    ReportRow row = Evaluate(RowId("thm-alpha-bb", k), doc, kIacsm,
                             ctx.record_timing);
    Verdict v;
    CommonChecks(row, v);
    const AlphaReport& alpha = *row.alphas.average_decreasing;
    if (!alpha.unbounded()) {
      const Rat a = *alpha.alpha;
      v.Require(row.run.total_payment <= a * row.run.allocation_cost,
                "payments <= alpha C(A)");
      v.Require(AtMost(row.run.approx_ratio, 2 * a * a * a * Harmonic(n)),
                "approx <= 2 alpha^3 H_n");
    }
    Record(ctx, std::move(row), v);
  }
}

// Shared body of the three combinatorial suites; `bound` maps an instance
// to the structural limit on alpha_max.
void Application(const json& entry, Context& ctx, const std::string& suite,
                 const std::function<GeneratorSpec(std::mt19937_64&, int)>& make,
                 const std::function<Rat(const InstanceDoc&)>& bound) {
  const int count = Get(entry, "count", 10);
  std::mt19937_64 rng(Get(entry, "seed", 1));
  for (int k = 0; k < count; ++k) {
    const InstanceDoc doc = Generate(make(rng, k));
    ReportRow row = Evaluate(RowId(suite, k), doc, kSm, ctx.record_timing);
    Verdict v;
    CommonChecks(row, v);
    const std::optional<Rat> alpha =
        row.alphas.max_bounded ? row.alphas.max_bounded->alpha : std::nullopt;
    v.Require(AtMost(alpha, bound(doc)) && alpha.has_value(),
              "alpha_max <= structural bound");
    v.Require(AtMost(row.run.approx_ratio, alpha), "approx <= alpha_max");
    Record(ctx, std::move(row), v);
  }
}

int MaxDegreeOf(const InstanceDoc& doc) {
  return std::visit(
      [](const auto& rep) -> int {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, VertexCoverCost> ||
                      std::is_same_v<T, MatchingCost>) {
          return rep.graph.MaxDegree();
        } else if constexpr (std::is_same_v<T, SetCoverCost>) {
          return rep.MaxSetSize();
        } else {
          throw PreconditionError("not a combinatorial cost");
        }
      },
      doc.item_costs.at(0).rep());
}

void SetCoverSuite(const json& entry, Context& ctx) {
  Application(
      entry, ctx, "thm-appl-sc",
      [](std::mt19937_64& rng, int) {
        return GeneratorSpec{"set-cover",
                             {{"n", std::to_string(Between(rng, 3, 10))},
                              {"sets", std::to_string(Between(rng, 2, 6))},
                              {"d", std::to_string(Between(rng, 1, 4))}},
                             rng()};
      },
      [](const InstanceDoc& doc) { return Rat(MaxDegreeOf(doc)); });
}

void VertexCoverSuite(const json& entry, Context& ctx) {
  Application(
      entry, ctx, "thm-appl-vc",
      [](std::mt19937_64& rng, int k) {
        if (k % 4 == 0) {
          return GeneratorSpec{"vertex-cover",
                               {{"graph", "star"},
                                {"k", std::to_string(Between(rng, 1, 4))}},
                               rng()};
        }
        return GeneratorSpec{"vertex-cover",
                             {{"graph", "random"},
                              {"vertices", std::to_string(Between(rng, 4, 7))},
                              {"edges", std::to_string(Between(rng, 2, 6))}},
                             rng()};
      },
      [](const InstanceDoc& doc) { return Rat(MaxDegreeOf(doc)); });
}

void MatchingSuite(const json& entry, Context& ctx) {
  Application(
      entry, ctx, "thm-appl-matching",
      [](std::mt19937_64& rng, int k) {
        return GeneratorSpec{
            "matching",
            {{"graph", k % 2 == 0 ? "bipartite" : "random"},
             {"vertices", std::to_string(Between(rng, 4, 7))},
             {"edges", std::to_string(Between(rng, 2, 4))}},
            rng()};
      },
      [](const InstanceDoc& doc) {
        const auto& g = std::get<MatchingCost>(doc.item_costs[0].rep()).graph;
        const int k = g.MaxDegree();
        return g.IsBipartite() ? Rat(k) : Rat(5 * k + 3, 4);
      });
}

void TightSuite(const json& entry, Context& ctx) {
  const int n = Get(entry, "n", 3);
  const int k = Get(entry, "k", 6);
  const int steps = Get(entry, "steps", 4);
  std::optional<Rat> previous;
  Rat eps(1);
  for (int t = 1; t <= steps; ++t) {
    eps /= 10;
    const InstanceDoc doc = Generate(
        {"paper-tight",
         {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"eps", eps.ToString()}},
         0});
    ReportRow row = Evaluate(RowId("prop-tight", t), doc, kSm, ctx.record_timing);
    Verdict v;
    CommonChecks(row, v);
    v.Require(row.run.outcome.allocation.IsEmpty(), "nobody served");
    const Rat floor = (Rat(k) * Harmonic(n) - n * eps) / k;
    v.Require(row.run.approx_ratio && floor <= *row.run.approx_ratio,
              "approx >= (k H_n - n eps) / k");
    if (previous && row.run.approx_ratio) {
      v.Require(*previous < *row.run.approx_ratio, "ratio increases as eps shrinks");
    }
    previous = row.run.approx_ratio;
    Record(ctx, std::move(row), v);
  }
}

void NonSeparableSuite(const json& entry, Context& ctx) {
  const int count = Get(entry, "count", 12);
  std::mt19937_64 rng(Get(entry, "seed", 1));
  const std::vector<NonSeparableSpec> builtins = {
      {"lifted-separable", {}},
      {"served-players", {}},
      {"shared-setup", {Rat(3), Rat(1, 2)}},
      {"capped-union", {Rat(2)}},
  };
  for (int k = 0; k < count; ++k) {
    const int n = Between(rng, 1, 4);
    const int m = Between(rng, 1, std::min(3, kMaxExhaustiveAllocationBits / n));
    InstanceDoc doc = Generate({"random-symmetric",
                                {{"n", std::to_string(n)}, {"m", std::to_string(m)}},
                                rng()});
    doc.allocation_cost = builtins[k % builtins.size()];
    if (doc.allocation_cost->name != "lifted-separable") doc.item_costs.clear();
    ReportRow row = Evaluate(RowId("ns-sm", k), doc, kSm, ctx.record_timing);
    Verdict v;
    CommonChecks(row, v);
    const std::optional<Rat> alpha_min = row.alphas.min_bounded->alpha;
    const std::optional<Rat> alpha_max = row.alphas.max_bounded->alpha;
    v.Require(AtMost(row.run.approx_ratio,
                     alpha_min ? std::optional<Rat>(*alpha_min * Harmonic(n))
                               : std::nullopt),
              "approx <= alpha_min H_n");
    v.Require(AtMost(row.run.approx_ratio, alpha_max), "approx <= alpha_max");
    Record(ctx, std::move(row), v);
  }
}

void DirectorySuite(const json& entry, Context& ctx) {
  namespace fs = std::filesystem;
  if (!entry.contains("path")) {
    throw PreconditionError("directory suite needs a \"path\"");
  }
  fs::path dir(entry.at("path").get<std::string>());
  if (dir.is_relative()) dir = fs::path(ctx.base_dir) / dir;
  const MechanismSpec spec{
      ParseMechanism(entry.value("mechanism", std::string("iacsm"))), {}};
  std::vector<fs::path> files;
  for (const auto& f : fs::directory_iterator(dir)) {
    if (f.path().extension() == ".inst") files.push_back(f.path());
  }
  std::sort(files.begin(), files.end());
  for (const fs::path& f : files) {
    ReportRow row = Evaluate(f.filename().string(),
                             ReadInstanceFile(f.string()), spec,
                             ctx.record_timing);
    Verdict v;
    CommonChecks(row, v);
    Record(ctx, std::move(row), v);
  }
}

using SuiteFn = std::function<void(const json&, Context&)>;

const std::map<std::string, SuiteFn>& Suites() {
  static const auto* suites = new std::map<std::string, SuiteFn>{
      {"corollary-adm", AdmissibleBudget},
      {"thm-alpha-bb", AlphaBudget},
      {"thm-appl-sc", SetCoverSuite},
      {"thm-appl-vc", VertexCoverSuite},
      {"thm-appl-matching", MatchingSuite},
      {"prop-tight", TightSuite},
      {"ns-sm", NonSeparableSuite},
      {"directory", DirectorySuite},
  };
  return *suites;
}

// 1-based line and column of a byte offset.
std::pair<int, int> Locate(std::string_view text, size_t offset) {
  int line = 1;
  int column = 1;
  for (size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

std::vector<std::string> SuiteNames() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : Suites()) names.push_back(name);
  return names;
}

SuiteResult RunSuiteConfig(std::string_view config_text,
                           const std::string& base_dir, bool record_timing) {
  SuiteResult result;
  if (config_text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    return result;
  }
  json config;
  try {
    config = json::parse(config_text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = Locate(config_text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(line, column, "invalid suite config JSON");
  }
  if (!config.is_object()) throw ParseError(1, 1, "suite config must be an object");
  if (!config.contains("suites")) return result;
  const json& suites = config.at("suites");
  if (!suites.is_array()) throw ParseError(1, 1, "\"suites\" must be an array");

  Context ctx{base_dir, record_timing, &result};
  for (const json& entry : suites) {
    if (!entry.is_object() || !entry.contains("name") ||
        !entry.at("name").is_string()) {
      throw ParseError(1, 1, "every suite entry needs a \"name\" string");
    }
    const std::string name = entry.at("name").get<std::string>();
    auto it = Suites().find(name);
    if (it == Suites().end()) {
      throw PreconditionError("unknown suite '" + name + "'");
    }
    try {
      it->second(entry, ctx);
    } catch (const json::exception& e) {
      throw PreconditionError("suite " + name + ": bad parameter: " + e.what());
    }
  }
  return result;
}

}  // namespace costshare
