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

#include "costshare/cli/commands.h"

#include <filesystem>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "costshare/analysis/evaluate.h"
#include "costshare/cli/generators.h"
#include "costshare/cli/instance_file.h"
#include "costshare/cli/report_file.h"
#include "costshare/cli/suite.h"
#include "costshare/core/error.h"
#include "costshare/costs/alpha.h"
#include "costshare/costs/catalog.h"

namespace costshare {
namespace {

struct RunArgs {
  std::string instance;
  std::string mechanism = "iacsm";
  std::string order;
  std::string trace_out;
  std::string out;
  bool no_timing = false;
};

struct AlphaArgs {
  std::string instance;
  std::string cost;
  int n = 4;
  std::string k = "6";
};

struct GenArgs {
  std::string kind;
  std::vector<std::string> params;
  uint64_t seed = 0;
  std::string out;
};

struct SuiteArgs {
  std::string config;
  std::string out;
  bool no_timing = false;
};

struct CheckArgs {
  std::string instance;
};

void Emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    WriteTextFile(path, text);
  }
}

std::vector<int> ParseOrder(const std::string& text, int n) {
  std::vector<int> order;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    size_t used = 0;
    int value = -1;
    try {
      value = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size() || part.empty()) {
      throw PreconditionError("--order expects comma-separated player indices");
    }
    order.push_back(value);
  }
  if (static_cast<int>(order.size()) != n) {
    throw PreconditionError("--order must list all " + std::to_string(n) +
                            " players");
  }
  return order;
}

int CmdRun(const RunArgs& args, std::ostream& out, std::ostream& err) {
  const InstanceDoc doc = ReadInstanceFile(args.instance);
  const Instance instance = doc.Build();
  MechanismSpec spec{ParseMechanism(args.mechanism), {}};
  if (!args.order.empty()) {
    if (spec.kind != MechanismKind::kSequential) {
      throw PreconditionError("--order applies to the sm mechanism only");
    }
    spec.order = ParseOrder(args.order, doc.num_players);
  }
  if (spec.kind != MechanismKind::kSequential) {
    if (!instance.is_separable()) {
      throw PreconditionError("IACSM-requires-separable-costs: instance has an allocation cost");
    }
    if (!instance.AllValuationsSymmetric()) {
      throw PreconditionError(
          "IACSM-requires-symmetric-submodular: instance has table valuations");
    }
  }

  const auto start = std::chrono::steady_clock::now();
  ReportRow row;
  row.instance_id = std::filesystem::path(args.instance).filename().string();
  row.num_players = doc.num_players;
  row.num_items = doc.num_items;
  row.run = EvaluateRun(instance, spec);
  row.alphas = ComputeInstanceAlphas(instance);
  if (!args.no_timing) {
    row.wall_time_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  }
  bool ok = row.run.flags.AllHold();
  if (spec.kind == MechanismKind::kSequential) {
    ok = ok && row.run.budget_ratio == Rat(1);
  } else {
    ok = ok && row.run.allocation_cost <= row.run.total_payment;
  }
  row.check = ok ? "pass" : "fail";

  if (!args.trace_out.empty()) {
    if (!row.run.trace) {
      err << "note: the sm mechanism records no trace; " << args.trace_out
          << " not written\n";
    } else {
      Emit(args.trace_out, FormatTrace(*row.run.trace), out);
    }
  }
  std::vector<ReportRow> rows;
  rows.push_back(std::move(row));
  Emit(args.out, FormatReport(std::move(rows)), out);
  return ok ? kExitOk : kExitCheckFailed;
}

std::string Witness(const AlphaReport& r) {
  std::string out;
  if (r.witness_allocation) out += "A=" + r.witness_allocation->ToString() + " ";
  if (!r.witness_subset.empty()) out += "S=" + r.witness_subset.ToString() + " ";
  if (!r.witness_superset.empty()) out += "T=" + r.witness_superset.ToString() + " ";
  if (r.witness_player >= 0) out += "player=" + std::to_string(r.witness_player);
  if (!out.empty() && out.back() == ' ') out.pop_back();
  return out.empty() ? "-" : out;
}

void PrintAlpha(std::ostream& out, const std::string& label,
                const std::string& estimator,
                const std::function<AlphaReport()>& compute) {
  out << std::left << std::setw(24) << label << std::setw(22) << estimator;
  try {
    const AlphaReport r = compute();
    out << std::setw(20) << r.ToString() << " " << Witness(r) << "\n";
  } catch (const SizeLimitError& e) {
    out << std::setw(20) << "n/a" << " " << e.what() << "\n";
  }
}

void PrintSeparableAlphas(std::ostream& out, const std::string& label,
                          const SetFunction& c) {
  PrintAlpha(out, label, "average-decreasing",
             [&] { return AlphaAverageDecreasing(c); });
  PrintAlpha(out, label, "min-bounded", [&] { return AlphaMinBounded(c); });
  PrintAlpha(out, label, "max-bounded", [&] { return AlphaMaxBounded(c); });
}

std::optional<CostFn> NamedCatalogCost(const std::string& name, int n,
                                       const Rat& k) {
  if (name == "public-good") return PublicGoodCost(n, k);
  if (name == "unit-additive") return AdditiveCost(std::vector<Rat>(n, Rat(1)));
  for (NamedCost& c : CatalogCosts(n, k)) {
    if (c.name == name) return c.cost;
  }
  return std::nullopt;
}

int CmdAlpha(const AlphaArgs& args, std::ostream& out) {
  if (args.instance.empty() == args.cost.empty()) {
    throw PreconditionError("alpha takes either an instance file or --cost");
  }
  out << std::left << std::setw(24) << "cost" << std::setw(22) << "estimator"
      << std::setw(21) << "alpha" << "witness\n";
  if (!args.cost.empty()) {
    const Rat k = Rat::Parse(args.k);
    std::optional<CostFn> c = NamedCatalogCost(args.cost, args.n, k);
    if (!c) {
      throw PreconditionError(
          "unknown cost '" + args.cost +
          "' (expected step, tight, intersection, subadditivity-example, "
          "public-good or unit-additive)");
    }
    PrintSeparableAlphas(out, args.cost, c->AsSetFunction());
    return kExitOk;
  }
  const Instance instance = ReadInstanceFile(args.instance).Build();
  if (instance.is_separable()) {
    for (int j = 0; j < instance.num_items(); ++j) {
      PrintSeparableAlphas(out, "item " + std::to_string(j),
                           instance.item_cost(j));
    }
    return kExitOk;
  }
  const auto& cost = std::get<AllocationCostFn>(instance.cost_model());
  const std::string label = "allocation " + cost.name();
  out << std::left << std::setw(24) << label << std::setw(22)
      << "average-decreasing" << std::setw(21) << "n/a"
      << "separable costs only\n";
  PrintAlpha(out, label, "min-bounded-ns", [&] { return AlphaMinBoundedNs(cost); });
  PrintAlpha(out, label, "max-bounded-ns", [&] { return AlphaMaxBoundedNs(cost); });
  return kExitOk;
}

int CmdGen(const GenArgs& args, std::ostream& out) {
  const InstanceDoc doc =
      Generate({args.kind, ParseParams(args.params), args.seed});
  Emit(args.out, SerializeInstance(doc), out);
  return kExitOk;
}

int CmdSuite(const SuiteArgs& args, std::ostream& out, std::ostream& err) {
  const std::string text = ReadTextFile(args.config);
  const std::string base =
      std::filesystem::path(args.config).parent_path().string();
  SuiteResult result =
      RunSuiteConfig(text, base.empty() ? "." : base, !args.no_timing);
  const size_t rows = result.rows.size();
  Emit(args.out, FormatReport(std::move(result.rows)), out);
  err << "suite: " << rows << " rows, " << result.failures << " failed\n";
  return result.failures == 0 ? kExitOk : kExitCheckFailed;
}

std::string Flags(const ClassFlags& f) {
  std::string sub = f.subadditive ? (*f.subadditive ? "true" : "false")
                                  : "unknown";
  auto b = [](bool x) { return x ? "true" : "false"; };
  return std::string("nondecreasing=") + b(f.nondecreasing) +
         " submodular=" + b(f.submodular) + " symmetric=" + b(f.symmetric) +
         " xos-symmetric=" + b(f.xos_symmetric) + " subadditive=" + sub;
}

int CmdCheck(const CheckArgs& args, std::ostream& out) {
  const InstanceDoc doc = ReadInstanceFile(args.instance);
  for (int i = 0; i < doc.num_players; ++i) {
    out << "valuation " << i << ": "
        << Flags(Classify(doc.valuations[i].AsSetFunction())) << "\n";
  }
  for (size_t j = 0; j < doc.item_costs.size(); ++j) {
    out << "cost " << j << " (" << doc.item_costs[j].name() << "): "
        << Flags(Classify(doc.item_costs[j].AsSetFunction())) << "\n";
  }
  if (doc.allocation_cost) {
    out << "allocation cost: " << doc.allocation_cost->name << "\n";
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Cost-sharing mechanisms: runs, alpha estimates, generators "
               "and invariant suites"};
  app.require_subcommand(1, 1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run a mechanism on an instance file");
  run_cmd->add_option("instance", run.instance, "Instance file")->required();
  run_cmd->add_option("--mechanism", run.mechanism, "iacsm or sm")
      ->check(CLI::IsMember({"iacsm", "sm"}));
  run_cmd->add_option("--order", run.order,
                      "Player order for sm, e.g. 2,0,1");
  run_cmd->add_option("--trace-out", run.trace_out, "Write the IACSM trace here");
  run_cmd->add_option("--out", run.out, "CSV report path (default stdout)");
  run_cmd->add_flag("--no-timing", run.no_timing, "Write 0 for wall time");

  AlphaArgs alpha;
  auto* alpha_cmd = app.add_subcommand("alpha", "Estimate alpha values");
  alpha_cmd->add_option("instance", alpha.instance, "Instance file");
  alpha_cmd->add_option("--cost", alpha.cost,
                        "Built-in cost: step, tight, intersection, "
                        "subadditivity-example, public-good, unit-additive");
  alpha_cmd->add_option("--n", alpha.n, "Players for --cost")
      ->check(CLI::Range(1, kMaxGroundSize));
  alpha_cmd->add_option("--k", alpha.k, "Scale parameter for --cost (p/q)");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  gen_cmd->add_option("kind", gen.kind, "Generator kind")->required();
  gen_cmd->add_option("params", gen.params, "key=value parameters");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--out", gen.out, "Output path (default stdout)");

  SuiteArgs suite;
  auto* suite_cmd = app.add_subcommand("suite", "Run invariant suites from a JSON config");
  suite_cmd->add_option("config", suite.config, "Suite config file")->required();
  suite_cmd->add_option("--out", suite.out, "CSV report path (default stdout)");
  suite_cmd->add_flag("--no-timing", suite.no_timing, "Write 0 for wall time");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Classify valuations and costs");
  check_cmd->add_option("instance", check.instance, "Instance file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    for (CLI::App* sub : app.get_subcommands()) err << sub->help();
    if (app.get_subcommands().empty()) err << app.help();
    return kExitUsage;
  }

  try {
    if (*run_cmd) return CmdRun(run, out, err);
    if (*alpha_cmd) return CmdAlpha(alpha, out);
    if (*gen_cmd) return CmdGen(gen, out);
    if (*suite_cmd) return CmdSuite(suite, out, err);
    if (*check_cmd) return CmdCheck(check, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SizeLimitError& e) {
    err << "size limit exceeded: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace costshare
