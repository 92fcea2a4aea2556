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

#include "costshare/cli/instance_file.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

#include "costshare/core/error.h"

namespace costshare {
namespace {

constexpr std::string_view kMagic = "costshare-instance";
constexpr int kFormatVersion = 1;

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> Tokenize(std::string_view line) {
  std::vector<Token> tokens;
  size_t pos = 0;
  while (pos < line.size()) {
    if (line[pos] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[pos]))) {
      ++pos;
      continue;
    }
    const size_t start = pos;
    while (pos < line.size() && line[pos] != '#' &&
           !std::isspace(static_cast<unsigned char>(line[pos]))) {
      ++pos;
    }
    tokens.push_back({line.substr(start, pos - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

class LineParser {
 public:
  LineParser(int line_number, std::vector<Token> tokens, int end_column)
      : line_(line_number), tokens_(std::move(tokens)), end_column_(end_column) {}

  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError(line_, Column(), message);
  }
  [[noreturn]] void FailAt(const Token& t, const std::string& message) const {
    throw ParseError(line_, t.column, message);
  }

  bool Done() const { return next_ >= tokens_.size(); }
  size_t Remaining() const { return tokens_.size() - next_; }
  const Token& Peek() const {
    if (Done()) Fail("unexpected end of line");
    return tokens_[next_];
  }
  Token Next() {
    const Token& t = Peek();
    ++next_;
    return t;
  }

  int Int(int min_value, int max_value, std::string_view what) {
    const Token t = Next();
    int value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
      FailAt(t, "expected an integer " + std::string(what) + ", got '" +
                    std::string(t.text) + "'");
    }
    if (value < min_value || value > max_value) {
      FailAt(t, std::string(what) + " " + std::to_string(value) +
                    " out of range [" + std::to_string(min_value) + ", " +
                    std::to_string(max_value) + "]");
    }
    return value;
  }

  Rat Rational() {
    const Token t = Next();
    try {
      return Rat::Parse(t.text);
    } catch (const std::exception& e) {
      FailAt(t, "bad rational '" + std::string(t.text) + "': " + e.what());
    }
  }

  std::vector<Rat> Rationals() {
    std::vector<Rat> out;
    while (!Done()) out.push_back(Rational());
    return out;
  }

  void ExpectEnd() const {
    if (!Done()) FailAt(tokens_[next_], "unexpected trailing token");
  }

  int line() const { return line_; }
  int Column() const {
    return Done() ? end_column_ : tokens_[next_].column;
  }
  const Token& Last() const { return tokens_[next_ - 1]; }

 private:
  int line_;
  std::vector<Token> tokens_;
  int end_column_;
  size_t next_ = 0;
};

// "{0,2}" over elements below `universe`.
PlayerSet ParseBraceSet(LineParser& p, int universe) {
  const Token t = p.Next();
  std::string_view s = t.text;
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') {
    p.FailAt(t, "expected a set like {0,2}, got '" + std::string(s) + "'");
  }
  s = s.substr(1, s.size() - 2);
  PlayerSet out;
  while (!s.empty()) {
    const size_t comma = s.find(',');
    const std::string_view part = s.substr(0, comma);
    int e = -1;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), e);
    if (ec != std::errc() || ptr != part.data() + part.size() || e < 0 ||
        e >= universe) {
      p.FailAt(t, "bad set element '" + std::string(part) + "'");
    }
    out = out.With(e);
    if (comma == std::string_view::npos) break;
    s = s.substr(comma + 1);
  }
  return out;
}

Graph ParseGraph(LineParser& p, int num_players) {
  Graph g;
  g.num_vertices = p.Int(1, kMaxGraphVertices, "vertex count");
  while (!p.Done()) {
    const Token t = p.Next();
    const size_t dash = t.text.find('-');
    int a = -1;
    int b = -1;
    bool ok = dash != std::string_view::npos;
    if (ok) {
      auto r1 = std::from_chars(t.text.data(), t.text.data() + dash, a);
      auto r2 = std::from_chars(t.text.data() + dash + 1,
                                t.text.data() + t.text.size(), b);
      ok = r1.ec == std::errc() && r1.ptr == t.text.data() + dash &&
           r2.ec == std::errc() && r2.ptr == t.text.data() + t.text.size();
    }
    if (!ok || a < 0 || b < 0 || a >= g.num_vertices || b >= g.num_vertices ||
        a == b) {
      p.FailAt(t, "bad edge '" + std::string(t.text) + "'");
    }
    g.edges.emplace_back(a, b);
  }
  if (static_cast<int>(g.edges.size()) != num_players) {
    p.Fail("graph cost needs one edge per player (" +
           std::to_string(num_players) + "), got " +
           std::to_string(g.edges.size()));
  }
  return g;
}

CostFn ParseCost(LineParser& p, int n) {
  const Token kind = p.Next();
  try {
    if (kind.text == "table") {
      const Token first = p.Peek();
      std::vector<Rat> values;
      while (!p.Done() && p.Peek().text != "approx") values.push_back(p.Rational());
      std::optional<Rat> error;
      if (!p.Done()) {
        p.Next();
        error = p.Rational();
        p.ExpectEnd();
      }
      if (values.size() != (size_t{1} << n)) {
        p.FailAt(first, "cost table needs 2^" + std::to_string(n) + " = " +
                            std::to_string(size_t{1} << n) + " values, got " +
                            std::to_string(values.size()));
      }
      CostFn c = CostFn::Table(
          SetFunction::FromTable(n, std::move(values), SetFunctionRole::kCost));
      return error ? c.WithApproximationError(*error) : c;
    }
    if (kind.text == "set-cover") {
      std::vector<PlayerSet> family;
      while (!p.Done()) family.push_back(ParseBraceSet(p, n));
      return CostFn::SetCover(n, std::move(family));
    }
    if (kind.text == "vertex-cover") return CostFn::VertexCover(ParseGraph(p, n));
    if (kind.text == "matching") return CostFn::Matching(ParseGraph(p, n));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    p.FailAt(kind, e.what());
  }
  p.FailAt(kind, "unknown cost kind '" + std::string(kind.text) +
                     "' (expected table, set-cover, vertex-cover or matching)");
}

ValuationFn ParseValuation(LineParser& p, int m) {
  const Token kind = p.Next();
  if (kind.text != "symmetric" && kind.text != "table") {
    p.FailAt(kind, "unknown valuation kind '" + std::string(kind.text) +
                       "' (expected symmetric or table)");
  }
  const Token first = p.Done() ? kind : p.Peek();
  std::vector<Rat> values = p.Rationals();
  try {
    if (kind.text == "symmetric") {
      if (static_cast<int>(values.size()) != m) {
        p.FailAt(first, "symmetric valuation needs " + std::to_string(m) +
                            " marginals, got " + std::to_string(values.size()));
      }
      return SymmetricSubmodularValuation(std::move(values));
    }
    if (values.size() != (size_t{1} << m)) {
      p.FailAt(first, "valuation table needs " +
                          std::to_string(size_t{1} << m) + " values, got " +
                          std::to_string(values.size()));
    }
    return TableValuation(SetFunction::FromTable(m, std::move(values),
                                                 SetFunctionRole::kValuation));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    p.FailAt(first, e.what());
  }
}

std::string CostToString(const CostFn& c) {
  std::string out;
  std::visit(
      [&out](const auto& rep) {
        using T = std::decay_t<decltype(rep)>;
        if constexpr (std::is_same_v<T, TableCost>) {
          out = "table";
          for (const Rat& v : rep.table.ToTable()) out += " " + v.ToString();
        } else if constexpr (std::is_same_v<T, SetCoverCost>) {
          out = "set-cover";
          for (PlayerSet s : rep.family) out += " " + s.ToString();
        } else {
          out = std::is_same_v<T, VertexCoverCost> ? "vertex-cover" : "matching";
          out += " " + std::to_string(rep.graph.num_vertices);
          for (auto [a, b] : rep.graph.edges) {
            out += " " + std::to_string(a) + "-" + std::to_string(b);
          }
        }
      },
      c.rep());
  if (c.is_approximation()) out += " approx " + c.approximation_error().ToString();
  return out;
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

Instance InstanceDoc::Build() const {
  std::vector<SetFunction> functions;
  for (const CostFn& c : item_costs) functions.push_back(c.AsSetFunction());
  if (!allocation_cost) return Instance(valuations, std::move(functions));
  return Instance(valuations,
                  MakeNonSeparableCost(*allocation_cost, num_players,
                                       num_items, functions));
}

bool SameCost(const CostFn& a, const CostFn& b) {
  if (a.rep().index() != b.rep().index() ||
      a.approximation_error() != b.approximation_error()) {
    return false;
  }
  return std::visit(
      [&b](const auto& rep) {
        using T = std::decay_t<decltype(rep)>;
        const T& other = std::get<T>(b.rep());
        if constexpr (std::is_same_v<T, TableCost>) {
          return rep.table.ToTable() == other.table.ToTable();
        } else if constexpr (std::is_same_v<T, SetCoverCost>) {
          return rep.num_elements == other.num_elements &&
                 rep.family == other.family;
        } else {
          return rep.graph == other.graph;
        }
      },
      a.rep());
}

bool operator==(const InstanceDoc& a, const InstanceDoc& b) {
  if (a.num_players != b.num_players || a.num_items != b.num_items ||
      a.valuations != b.valuations || a.allocation_cost != b.allocation_cost ||
      a.item_costs.size() != b.item_costs.size()) {
    return false;
  }
  for (size_t j = 0; j < a.item_costs.size(); ++j) {
    if (!SameCost(a.item_costs[j], b.item_costs[j])) return false;
  }
  return true;
}

InstanceDoc ParseInstance(std::string_view text) {
  InstanceDoc doc;
  std::vector<std::optional<ValuationFn>> valuations;
  std::vector<std::optional<CostFn>> costs;
  bool seen_magic = false;
  int last_line = 0;

  int line_number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = end + 1;
    ++line_number;
    std::vector<Token> tokens = Tokenize(line);
    if (tokens.empty()) continue;
    last_line = line_number;
    LineParser p(line_number, std::move(tokens), static_cast<int>(line.size()) + 1);
    const Token directive = p.Next();

    if (!seen_magic) {
      if (directive.text != kMagic) {
        p.FailAt(directive, "expected '" + std::string(kMagic) + " " +
                                std::to_string(kFormatVersion) + "' header");
      }
      p.Int(kFormatVersion, kFormatVersion, "format version");
      p.ExpectEnd();
      seen_magic = true;
      continue;
    }
    if (directive.text == "players") {
      if (doc.num_players) p.FailAt(directive, "players given twice");
      doc.num_players = p.Int(1, kMaxGroundSize, "player count");
      valuations.resize(doc.num_players);
      p.ExpectEnd();
    } else if (directive.text == "items") {
      if (doc.num_items) p.FailAt(directive, "items given twice");
      doc.num_items = p.Int(1, kMaxGroundSize, "item count");
      costs.resize(doc.num_items);
      p.ExpectEnd();
    } else if (directive.text == "valuation") {
      if (!doc.num_players || !doc.num_items) {
        p.FailAt(directive, "players and items must precede valuations");
      }
      const int i = p.Int(0, doc.num_players - 1, "player index");
      if (valuations[i]) p.FailAt(p.Last(), "valuation given twice");
      valuations[i] = ParseValuation(p, doc.num_items);
    } else if (directive.text == "cost") {
      if (!doc.num_players || !doc.num_items) {
        p.FailAt(directive, "players and items must precede costs");
      }
      const int j = p.Int(0, doc.num_items - 1, "item index");
      if (costs[j]) p.FailAt(p.Last(), "cost given twice");
      costs[j] = ParseCost(p, doc.num_players);
    } else if (directive.text == "allocation-cost") {
      if (doc.allocation_cost) p.FailAt(directive, "allocation-cost given twice");
      NonSeparableSpec spec{std::string(p.Next().text), {}};
      const Token name = p.Last();
      bool known = false;
      for (const std::string& n : NonSeparableNames()) known = known || n == spec.name;
      if (!known) p.FailAt(name, "unknown allocation cost '" + spec.name + "'");
      spec.params = p.Rationals();
      doc.allocation_cost = std::move(spec);
    } else {
      p.FailAt(directive, "unknown directive '" + std::string(directive.text) + "'");
    }
  }

  const int end_line = last_line + 1;
  if (!seen_magic) throw ParseError(1, 1, "empty instance file");
  if (!doc.num_players || !doc.num_items) {
    throw ParseError(end_line, 1, "missing players or items line");
  }
  for (int i = 0; i < doc.num_players; ++i) {
    if (!valuations[i]) {
      throw ParseError(end_line, 1, "missing valuation for player " + std::to_string(i));
    }
    doc.valuations.push_back(std::move(*valuations[i]));
  }
  const bool wants_costs =
      !doc.allocation_cost || doc.allocation_cost->name == "lifted-separable";
  for (int j = 0; j < doc.num_items; ++j) {
    if (costs[j].has_value() != wants_costs) {
      throw ParseError(end_line, 1,
                       (wants_costs ? "missing cost for item "
                                    : "unexpected cost line for item ") +
                           std::to_string(j));
    }
    if (costs[j]) doc.item_costs.push_back(std::move(*costs[j]));
  }
  if (doc.allocation_cost) {
    try {
      doc.Build();
    } catch (const std::exception& e) {
      throw ParseError(end_line, 1, e.what());
    }
  }
  return doc;
}

std::string SerializeInstance(const InstanceDoc& doc) {
  std::ostringstream out;
  out << kMagic << " " << kFormatVersion << "\n";
  out << "players " << doc.num_players << "\n";
  out << "items " << doc.num_items << "\n";
  for (size_t i = 0; i < doc.valuations.size(); ++i) {
    out << "valuation " << i << " " << doc.valuations[i].ToString() << "\n";
  }
  for (size_t j = 0; j < doc.item_costs.size(); ++j) {
    out << "cost " << j << " " << CostToString(doc.item_costs[j]) << "\n";
  }
  if (doc.allocation_cost) {
    out << "allocation-cost " << doc.allocation_cost->name;
    for (const Rat& p : doc.allocation_cost->params) out << " " << p.ToString();
    out << "\n";
  }
  return out.str();
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteTextFile(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

InstanceDoc ReadInstanceFile(const std::string& path) {
  return ParseInstance(ReadTextFile(path));
}

void WriteInstanceFile(const std::string& path, const InstanceDoc& doc) {
  WriteTextFile(path, SerializeInstance(doc));
}

}  // namespace costshare
