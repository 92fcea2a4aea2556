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

#include "costshare/cli/generators.h"

#include <algorithm>
#include <charconv>
#include <functional>
#include <random>
#include <set>
#include <utility>

#include "costshare/core/error.h"
#include "costshare/costs/catalog.h"
#include "costshare/valuations/valuation.h"

namespace costshare {
namespace {

class Params {
 public:
  Params(const GeneratorSpec& spec, std::set<std::string> allowed)
      : kind_(spec.kind), values_(spec.params) {
    for (const auto& [key, value] : values_) {
      if (!allowed.count(key)) {
        throw PreconditionError("generator " + kind_ +
                                " has no parameter '" + key + "'");
      }
    }
  }

  int Int(const std::string& key, int fallback, int min_value,
          int max_value) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    int value = 0;
    const std::string& s = it->second;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || value < min_value ||
        value > max_value) {
      throw PreconditionError(kind_ + ": " + key + " must be an integer in [" +
                              std::to_string(min_value) + ", " +
                              std::to_string(max_value) + "], got '" + s + "'");
    }
    return value;
  }

  Rat Rational(const std::string& key, const Rat& fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
      return Rat::Parse(it->second);
    } catch (const std::exception& e) {
      throw PreconditionError(kind_ + ": bad rational for " + key + ": " +
                              e.what());
    }
  }

  std::string Choice(const std::string& key, const std::string& fallback,
                     const std::set<std::string>& choices) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    if (!choices.count(it->second)) {
      throw PreconditionError(kind_ + ": unsupported " + key + " '" +
                              it->second + "'");
    }
    return it->second;
  }

 private:
  std::string kind_;
  std::map<std::string, std::string> values_;
};

// Uniform index in [0, bound) from the raw engine output, so results do not
// depend on the standard library's distribution implementations.
size_t Draw(std::mt19937_64& rng, size_t bound) { return rng() % bound; }

template <typename T>
void Shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (size_t k = v.size(); k > 1; --k) std::swap(v[k - 1], v[Draw(rng, k)]);
}

std::vector<Rat> Grid(const Params& p) {
  const Rat step = p.Rational("grid_step", Rat(1, 2));
  const Rat top = p.Rational("grid_max", Rat(4));
  if (step.sign() <= 0 || top.sign() < 0) {
    throw PreconditionError("grid_step must be positive and grid_max >= 0");
  }
  std::vector<Rat> grid;
  for (Rat x; x <= top; x += step) grid.push_back(x);
  return grid;
}

std::vector<ValuationFn> RandomValuations(int n, int m,
                                          const std::vector<Rat>& grid,
                                          std::mt19937_64& rng) {
  std::vector<ValuationFn> out;
  for (int i = 0; i < n; ++i) out.emplace_back(GenSymmetricSubmodular(m, grid, rng()));
  return out;
}

InstanceDoc Assemble(std::vector<ValuationFn> valuations,
                     std::vector<CostFn> costs) {
  InstanceDoc doc;
  doc.num_players = static_cast<int>(valuations.size());
  doc.num_items = static_cast<int>(costs.size());
  doc.valuations = std::move(valuations);
  doc.item_costs = std::move(costs);
  return doc;
}

std::vector<std::pair<int, int>> RandomEdges(int vertices, int edges,
                                             bool bipartite,
                                             std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> pairs;
  const int left = vertices / 2;
  for (int a = 0; a < vertices; ++a) {
    for (int b = a + 1; b < vertices; ++b) {
      if (bipartite && !(a < left && b >= left)) continue;
      pairs.emplace_back(a, b);
    }
  }
  if (edges > static_cast<int>(pairs.size())) {
    throw PreconditionError("not enough vertex pairs for " +
                            std::to_string(edges) + " edges");
  }
  Shuffle(pairs, rng);
  pairs.resize(edges);
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

InstanceDoc RandomSymmetric(const GeneratorSpec& spec) {
  const Params p(spec, {"n", "m", "cost", "cost_max", "grid_step", "grid_max"});
  const int n = p.Int("n", 3, 1, 12);
  const int m = p.Int("m", 2, 1, 8);
  const std::string kind =
      p.Choice("cost", "submodular", {"submodular", "step", "random-table"});
  const Rat cost_max = p.Rational("cost_max", Rat(4));
  if (cost_max.sign() <= 0) throw PreconditionError("cost_max must be positive");
  const std::vector<Rat> grid = Grid(p);
  std::mt19937_64 rng(spec.seed);

  std::vector<CostFn> costs;
  for (int j = 0; j < m; ++j) {
    if (kind == "step") {
      costs.push_back(StepCost(n));
    } else if (kind == "submodular") {
      // Non-increasing marginals from {1/2, 1, ..., cost_max}.
      std::vector<Rat> steps;
      for (Rat x(1, 2); x <= cost_max; x += Rat(1, 2)) steps.push_back(x);
      costs.push_back(
          SymmetricCost(GenSymmetricSubmodular(n, steps, rng()).marginals()));
    } else {
      // Uniform over {1/2, 1, ..., cost_max} on every nonempty set.
      const Rat doubled = cost_max * 2;
      const size_t levels =
          std::max<int64_t>(doubled.num() / doubled.den(), 1);
      std::vector<Rat> values(size_t{1} << n);
      for (size_t s = 1; s < values.size(); ++s) {
        values[s] = Rat(1 + static_cast<int64_t>(Draw(rng, levels)), 2);
      }
      costs.push_back(CostFn::Table(SetFunction::FromTable(
          n, std::move(values), SetFunctionRole::kCost)));
    }
  }
  return Assemble(RandomValuations(n, m, grid, rng), std::move(costs));
}

InstanceDoc GraphInstance(const GeneratorSpec& spec, bool matching) {
  const Params p(spec, {"graph", "k", "vertices", "edges", "m", "grid_step",
                        "grid_max"});
  const std::string shape =
      matching ? p.Choice("graph", "random", {"random", "bipartite", "star"})
               : p.Choice("graph", "star", {"star", "random", "bipartite"});
  const int m = p.Int("m", 1, 1, 4);
  std::mt19937_64 rng(spec.seed);
  Graph g;
  if (shape == "star") {
    const int k = p.Int("k", 3, 1, kMaxOraclePlayers);
    g.num_vertices = k + 1;
    for (int leaf = 1; leaf <= k; ++leaf) g.edges.emplace_back(0, leaf);
  } else {
    g.num_vertices = p.Int("vertices", matching ? 6 : 5, 2, kMaxGraphVertices);
    const int edges = p.Int("edges", matching ? 7 : 6, 1, kMaxOraclePlayers);
    g.edges = RandomEdges(g.num_vertices, edges, shape == "bipartite", rng);
  }
  const int n = static_cast<int>(g.edges.size());
  std::vector<CostFn> costs;
  for (int j = 0; j < m; ++j) {
    costs.push_back(matching ? CostFn::Matching(g) : CostFn::VertexCover(g));
  }
  return Assemble(RandomValuations(n, m, Grid(p), rng), std::move(costs));
}

InstanceDoc SetCoverInstance(const GeneratorSpec& spec) {
  const Params p(spec, {"n", "sets", "d", "m", "grid_step", "grid_max"});
  const int n = p.Int("n", 6, 1, kMaxOraclePlayers);
  const int sets = p.Int("sets", 4, 1, 64);
  const int d = p.Int("d", 3, 1, n);
  const int m = p.Int("m", 1, 1, 4);
  std::mt19937_64 rng(spec.seed);

  std::vector<PlayerSet> family;
  for (int s = 0; s < sets; ++s) {
    std::vector<int> elements(n);
    for (int e = 0; e < n; ++e) elements[e] = e;
    Shuffle(elements, rng);
    const int size = 1 + static_cast<int>(Draw(rng, d));
    PlayerSet set;
    for (int k = 0; k < size; ++k) set = set.With(elements[k]);
    family.push_back(set);
  }
  // Every element must be coverable: put each uncovered element into the
  // first set with room, or into a new singleton.
  for (int e = 0; e < n; ++e) {
    bool covered = false;
    for (PlayerSet s : family) covered = covered || s.contains(e);
    if (covered) continue;
    bool placed = false;
    for (PlayerSet& s : family) {
      if (s.size() < d) {
        s = s.With(e);
        placed = true;
        break;
      }
    }
    if (!placed) family.push_back(PlayerSet::Single(e));
  }
  std::vector<CostFn> costs;
  for (int j = 0; j < m; ++j) costs.push_back(CostFn::SetCover(n, family));
  return Assemble(RandomValuations(n, m, Grid(p), rng), std::move(costs));
}

InstanceDoc TightInstance(const GeneratorSpec& spec) {
  const Params p(spec, {"n", "k", "eps"});
  const int n = p.Int("n", 3, 1, kMaxGroundSize);
  const Rat k = p.Rational("k", Rat(6));
  const Rat eps = p.Rational("eps", Rat(1, 10));
  if (k.sign() <= 0 || eps.sign() < 0 || !(eps < k / n)) {
    throw PreconditionError("paper-tight needs k > 0 and 0 <= eps < k/n");
  }
  std::vector<ValuationFn> valuations;
  for (int j = 1; j <= n; ++j) {
    valuations.emplace_back(SymmetricSubmodularValuation({k / j - eps}));
  }
  return Assemble(std::move(valuations), {TightCost(n, k)});
}

InstanceDoc IntersectionInstance(const GeneratorSpec& spec) {
  const Params p(spec, {"n", "value"});
  const int n = p.Int("n", 4, 1, kMaxGroundSize);
  const Rat value = p.Rational("value", Rat(2));
  if (value.sign() < 0) throw PreconditionError("value must be non-negative");
  std::vector<ValuationFn> valuations(
      n, ValuationFn(SymmetricSubmodularValuation({value})));
  return Assemble(std::move(valuations), {IntersectionCost(n)});
}

InstanceDoc SubadditivityInstance(const GeneratorSpec& spec) {
  const Params p(spec, {"grid_step", "grid_max"});
  std::mt19937_64 rng(spec.seed);
  return Assemble(RandomValuations(3, 1, Grid(p), rng),
                  {SubadditivityExampleCost()});
}

using GeneratorFn = std::function<InstanceDoc(const GeneratorSpec&)>;

const std::map<std::string, GeneratorFn>& Registry() {
  static const auto* registry = new std::map<std::string, GeneratorFn>{
      {"random-symmetric", RandomSymmetric},
      {"vertex-cover",
       [](const GeneratorSpec& s) { return GraphInstance(s, false); }},
      {"set-cover", SetCoverInstance},
      {"matching", [](const GeneratorSpec& s) { return GraphInstance(s, true); }},
      {"paper-tight", TightInstance},
      {"paper-intersection", IntersectionInstance},
      {"paper-subadditivity", SubadditivityInstance},
  };
  return *registry;
}

}  // namespace

std::vector<std::string> GeneratorKinds() {
  std::vector<std::string> kinds;
  for (const auto& [name, fn] : Registry()) kinds.push_back(name);
  return kinds;
}

InstanceDoc Generate(const GeneratorSpec& spec) {
  auto it = Registry().find(spec.kind);
  if (it == Registry().end()) {
    std::string known;
    for (const std::string& k : GeneratorKinds()) known += " " + k;
    throw PreconditionError("unknown generator '" + spec.kind +
                            "'; expected one of:" + known);
  }
  return it->second(spec);
}

std::map<std::string, std::string> ParseParams(
    const std::vector<std::string>& args) {
  std::map<std::string, std::string> params;
  for (const std::string& arg : args) {
    const size_t eq = arg.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw PreconditionError("expected key=value, got '" + arg + "'");
    }
    params[arg.substr(0, eq)] = arg.substr(eq + 1);
  }
  return params;
}

}  // namespace costshare
