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

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "costshare/cli/commands.h"
#include "costshare/cli/generators.h"
#include "costshare/cli/instance_file.h"
#include "costshare/cli/report_file.h"
#include "costshare/cli/suite.h"
#include "costshare/core/error.h"
#include "gtest/gtest.h"

namespace costshare {
namespace {

namespace fs = std::filesystem;

constexpr char kTwoPlayer[] =
    "costshare-instance 1\n"
    "players 2\n"
    "items 1\n"
    "valuation 0 symmetric 3/1\n"
    "valuation 1 symmetric 1/2\n"
    "cost 0 table 0/1 2/1 2/1 2/1\n";

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult Cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = RunCli(args, out, err);
  return {status, out.str(), err.str()};
}

fs::path TempDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("costshare_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::vector<std::string> SplitLines(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

TEST(InstanceFileTest, ParseAndSerializeRoundTrip) {
  const InstanceDoc doc = ParseInstance(kTwoPlayer);
  EXPECT_EQ(doc.num_players, 2);
  EXPECT_EQ(doc.num_items, 1);
  EXPECT_EQ(SerializeInstance(doc), kTwoPlayer);
  EXPECT_EQ(ParseInstance(SerializeInstance(doc)), doc);
}

TEST(InstanceFileTest, CombinatorialAndNonSeparableRoundTrip) {
  const std::string text =
      "costshare-instance 1\n"
      "players 3\n"
      "items 3\n"
      "valuation 0 symmetric 2/1 1/1 0/1\n"
      "valuation 1 table 0/1 1/1 1/1 2/1 1/1 2/1 2/1 5/2\n"
      "valuation 2 symmetric 1/1 1/1 1/1\n"
      "cost 0 set-cover {0,1} {1,2} {0}\n"
      "cost 1 vertex-cover 4 0-1 0-2 0-3\n"
      "cost 2 matching 4 0-1 1-2 2-3\n";
  const InstanceDoc doc = ParseInstance(text);
  EXPECT_EQ(ParseInstance(SerializeInstance(doc)), doc);
  EXPECT_NO_THROW(doc.Build());

  const std::string ns =
      "costshare-instance 1\n"
      "players 2\n"
      "items 2\n"
      "valuation 0 symmetric 1/1 1/1\n"
      "valuation 1 symmetric 2/1 0/1\n"
      "allocation-cost shared-setup 3/1 1/2\n";
  const InstanceDoc ns_doc = ParseInstance(ns);
  ASSERT_TRUE(ns_doc.allocation_cost.has_value());
  EXPECT_EQ(ns_doc.allocation_cost->name, "shared-setup");
  EXPECT_EQ(ParseInstance(SerializeInstance(ns_doc)), ns_doc);
}

TEST(InstanceFileTest, CommentsAndBlankLinesIgnored) {
  const std::string text = std::string("# header comment\n\n") + kTwoPlayer +
                           "  # trailing\n";
  EXPECT_EQ(ParseInstance(text), ParseInstance(kTwoPlayer));
}

TEST(InstanceFileTest, ParseErrorsCarryPosition) {
  const std::string bad =
      "costshare-instance 1\n"
      "players 2\n"
      "items 1\n"
      "valuation 0 symmetric 3/x\n";
  try {
    ParseInstance(bad);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
    EXPECT_EQ(e.column(), 23);
  }
  EXPECT_THROW(ParseInstance("players 2\n"), ParseError);
  EXPECT_THROW(ParseInstance(std::string(kTwoPlayer) + "bogus 1\n"),
               ParseError);
  // Missing valuation for player 1.
  EXPECT_THROW(ParseInstance("costshare-instance 1\nplayers 2\nitems 1\n"
                             "valuation 0 symmetric 1/1\n"
                             "cost 0 table 0/1 1/1 1/1 1/1\n"),
               ParseError);
}

TEST(InstanceFileTest, FileRoundTrip) {
  const fs::path dir = TempDir("file_round_trip");
  const std::string path = (dir / "x.inst").string();
  const InstanceDoc doc = ParseInstance(kTwoPlayer);
  WriteInstanceFile(path, doc);
  EXPECT_EQ(ReadInstanceFile(path), doc);
  EXPECT_THROW(ReadInstanceFile((dir / "missing.inst").string()),
               std::runtime_error);
}

TEST(InstanceFileTest, BundledCorpusRoundTrips) {
  int files = 0;
  for (const auto& entry :
       fs::directory_iterator(fs::path(COSTSHARE_SOURCE_DIR) / "instances")) {
    if (entry.path().extension() != ".inst") continue;
    ++files;
    const InstanceDoc doc = ReadInstanceFile(entry.path().string());
    const std::string text = SerializeInstance(doc);
    EXPECT_EQ(ParseInstance(text), doc) << entry.path();
    EXPECT_EQ(SerializeInstance(ParseInstance(text)), text) << entry.path();
    EXPECT_NO_THROW(doc.Build()) << entry.path();
  }
  EXPECT_GE(files, 2);
}

TEST(GeneratorTest, DeterministicPerSeed) {
  for (const std::string& kind : GeneratorKinds()) {
    const GeneratorSpec spec{kind, {}, 17};
    const std::string a = SerializeInstance(Generate(spec));
    const std::string b = SerializeInstance(Generate(spec));
    EXPECT_EQ(a, b) << kind;
    EXPECT_NO_THROW(ParseInstance(a).Build()) << kind;
  }
  const std::string s1 =
      SerializeInstance(Generate({"random-symmetric", {{"n", "4"}}, 1}));
  const std::string s2 =
      SerializeInstance(Generate({"random-symmetric", {{"n", "4"}}, 2}));
  EXPECT_NE(s1, s2);
}

TEST(GeneratorTest, TightConstruction) {
  const InstanceDoc doc =
      Generate({"paper-tight", {{"n", "3"}, {"k", "6"}, {"eps", "1/10"}}, 0});
  const Instance inst = doc.Build();
  EXPECT_EQ(inst.num_players(), 3);
  EXPECT_EQ(inst.valuations()[0].Value(ItemSet{0}), Rat(59, 10));
  EXPECT_EQ(inst.valuations()[1].Value(ItemSet{0}), Rat(29, 10));
  EXPECT_EQ(inst.valuations()[2].Value(ItemSet{0}), Rat(19, 10));
  const SetFunction& c = inst.item_costs()[0];
  EXPECT_EQ(c(PlayerSet{0}), Rat(6));
  EXPECT_EQ(c(PlayerSet{1}), Rat(3));
  EXPECT_EQ(c(PlayerSet{2}), Rat(2));
  EXPECT_EQ(c(PlayerSet{1, 2}), Rat(5));
  EXPECT_EQ(c(PlayerSet{0, 1, 2}), Rat(6));
}

TEST(GeneratorTest, VertexCoverStar) {
  const InstanceDoc doc =
      Generate({"vertex-cover", {{"graph", "star"}, {"k", "3"}}, 5});
  EXPECT_EQ(doc.num_players, 3);
  EXPECT_NE(SerializeInstance(doc).find("vertex-cover 4 0-1 0-2 0-3"),
            std::string::npos);
}

TEST(GeneratorTest, BadParameters) {
  EXPECT_THROW(Generate({"nope", {}, 0}), PreconditionError);
  EXPECT_THROW(Generate({"random-symmetric", {{"color", "red"}}, 0}),
               PreconditionError);
  EXPECT_THROW(Generate({"random-symmetric", {{"n", "-1"}}, 0}),
               PreconditionError);
  EXPECT_THROW(ParseParams({"n3"}), PreconditionError);
  EXPECT_EQ(ParseParams({"n=3", "k=1/2"}).at("k"), "1/2");
}

TEST(ReportFileTest, HeaderAndFormatting) {
  EXPECT_EQ(ReportHeader().size(), 20u);
  EXPECT_EQ(ReportHeaderLine().substr(0, 22), "instance_id,mechanism,");
  EXPECT_EQ(FormatRatio(std::nullopt), "inf");
  EXPECT_EQ(FormatRatio(Rat(3, 2)), "3/2");
  EXPECT_EQ(FormatAlpha(std::nullopt), "n/a");
  EXPECT_EQ(FormatReport({}), ReportHeaderLine() + "\n");
}

TEST(SuiteTest, EmptyConfigs) {
  EXPECT_TRUE(RunSuiteConfig("").rows.empty());
  EXPECT_TRUE(RunSuiteConfig("{\"suites\": []}").rows.empty());
  EXPECT_EQ(RunSuiteConfig("{}").failures, 0);
  EXPECT_THROW(RunSuiteConfig("{\"suites\": [{\"name\": \"nope\"}]}"),
               std::exception);
  EXPECT_THROW(RunSuiteConfig("{not json"), std::exception);
}

TEST(SuiteTest, SmallSuitesPass) {
  const SuiteResult r = RunSuiteConfig(
      R"({"suites": [
           {"name": "corollary-adm", "count": 5, "seed": 1},
           {"name": "thm-appl-vc", "count": 3, "seed": 2},
           {"name": "prop-tight"}]})",
      ".", false);
  EXPECT_EQ(r.failures, 0);
  EXPECT_GE(r.rows.size(), 8u);
  for (const ReportRow& row : r.rows) {
    EXPECT_EQ(row.check, "pass") << row.instance_id;
    EXPECT_EQ(row.wall_time_ms, 0);
    if (row.instance_id.rfind("corollary-adm", 0) == 0) {
      EXPECT_EQ(row.run.budget_ratio, Rat(1)) << row.instance_id;
    }
  }
}

TEST(CliTest, RunReportsCsvRow) {
  const fs::path dir = TempDir("cli_run");
  const std::string path = (dir / "two.inst").string();
  WriteTextFile(path, kTwoPlayer);
  const std::string trace = (dir / "trace.txt").string();
  const CliResult r =
      Cli({"run", path, "--mechanism", "iacsm", "--trace-out", trace,
           "--no-timing"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const std::vector<std::string> lines = SplitLines(r.out);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], ReportHeaderLine());
  EXPECT_EQ(lines[1].rfind("two.inst,iacsm,2,1,2/1,2/1,1/1,5/2,2/1,5/4,", 0),
            0u)
      << lines[1];
  EXPECT_FALSE(ReadTextFile(trace).empty());

  const CliResult sm = Cli({"run", path, "--mechanism", "sm", "--order", "1,0",
                            "--no-timing"});
  EXPECT_EQ(sm.status, kExitOk) << sm.err;
  EXPECT_NE(sm.out.find(",sm,"), std::string::npos);
}

TEST(CliTest, UsageErrors) {
  const fs::path dir = TempDir("cli_usage");
  const std::string path = (dir / "two.inst").string();
  WriteTextFile(path, kTwoPlayer);
  EXPECT_EQ(Cli({"run", path, "--mechanism", "vcg"}).status, kExitUsage);
  EXPECT_EQ(Cli({}).status, kExitUsage);
  EXPECT_EQ(Cli({"frobnicate"}).status, kExitUsage);
  EXPECT_EQ(Cli({"run", (dir / "missing.inst").string()}).status, kExitUsage);
  EXPECT_EQ(Cli({"run", path, "--mechanism", "sm", "--order", "0,0"}).status,
            kExitUsage);

  const std::string bad = (dir / "bad.inst").string();
  WriteTextFile(bad, "costshare-instance 1\nplayers two\n");
  const CliResult r = Cli({"run", bad});
  EXPECT_EQ(r.status, kExitUsage);
  EXPECT_NE(r.err.find("line 2, column 9"), std::string::npos) << r.err;
}

TEST(CliTest, IacsmRequiresSymmetricSubmodularValuations) {
  const fs::path dir = TempDir("cli_precondition");
  const std::string path = (dir / "step.inst").string();
  WriteTextFile(path,
                "costshare-instance 1\nplayers 2\nitems 1\n"
                "valuation 0 symmetric 1/1\nvaluation 1 symmetric 1/1\n"
                "cost 0 table 0/1 1/1 1/1 3/1\n");
  // The step cost is not submodular, but IACSM accepts any cost; only the
  // valuations must be symmetric submodular.
  EXPECT_EQ(Cli({"run", path, "--no-timing"}).status, kExitOk);
  WriteTextFile(path,
                "costshare-instance 1\nplayers 1\nitems 2\n"
                "valuation 0 table 0/1 1/1 1/1 3/1\n"
                "cost 0 table 0/1 1/1\ncost 1 table 0/1 1/1\n");
  const CliResult r = Cli({"run", path, "--mechanism", "iacsm"});
  EXPECT_EQ(r.status, kExitUsage);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(Cli({"run", path, "--mechanism", "sm", "--no-timing"}).status,
            kExitOk);
}

TEST(CliTest, AlphaCommand) {
  const CliResult step = Cli({"alpha", "--cost", "step", "--n", "3"});
  ASSERT_EQ(step.status, kExitOk) << step.err;
  EXPECT_NE(step.out.find("2/1"), std::string::npos) << step.out;
  const CliResult add = Cli({"alpha", "--cost", "unit-additive", "--n", "4"});
  ASSERT_EQ(add.status, kExitOk) << add.err;
  EXPECT_NE(add.out.find("1/1"), std::string::npos);
  const CliResult big = Cli({"alpha", "--cost", "step", "--n", "30"});
  EXPECT_EQ(big.status, kExitUsage);
  EXPECT_NE(big.err.find("20"), std::string::npos) << big.err;
}

TEST(CliTest, GenIsByteIdentical) {
  const fs::path dir = TempDir("cli_gen");
  const std::string a = (dir / "a.inst").string();
  const std::string b = (dir / "b.inst").string();
  ASSERT_EQ(Cli({"gen", "matching", "--seed", "9", "--out", a}).status,
            kExitOk);
  ASSERT_EQ(Cli({"gen", "matching", "--seed", "9", "--out", b}).status,
            kExitOk);
  EXPECT_EQ(ReadTextFile(a), ReadTextFile(b));
  EXPECT_EQ(Cli({"gen", "nope"}).status, kExitUsage);
}

TEST(CliTest, SuiteCommand) {
  const fs::path dir = TempDir("cli_suite");
  const std::string empty = (dir / "empty.json").string();
  WriteTextFile(empty, "{\"suites\": []}");
  const CliResult r = Cli({"suite", empty});
  EXPECT_EQ(r.status, kExitOk) << r.err;
  EXPECT_EQ(SplitLines(r.out).front(), ReportHeaderLine());

  WriteTextFile((dir / "two.inst").string(), kTwoPlayer);
  const std::string cfg = (dir / "dir.json").string();
  WriteTextFile(cfg,
                R"({"suites": [{"name": "directory", "path": ".",
                                 "mechanism": "sm"}]})");
  const CliResult d = Cli({"suite", cfg, "--no-timing"});
  EXPECT_EQ(d.status, kExitOk) << d.err;
  EXPECT_NE(d.out.find("two.inst"), std::string::npos);
}

TEST(CliTest, CheckCommand) {
  const fs::path dir = TempDir("cli_check");
  const std::string path = (dir / "two.inst").string();
  WriteTextFile(path, kTwoPlayer);
  const CliResult r = Cli({"check", path});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_NE(r.out.find("submodular=true"), std::string::npos);
}

}  // namespace
}  // namespace costshare
