// Copyright 2026 The cdgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cdgame/verify_suite.h"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cdgame/families.h"
#include "cdgame/graph6.h"

namespace cdgame {
namespace {

using Claims = std::vector<ClaimResult>;

struct Named {
  std::string name;
  Graph graph;
};

std::vector<Named> LoadCorpus(const SuiteOptions& options) {
  std::vector<Named> out;
  for (const auto& path : options.corpus) {
    for (CorpusEntry& e : ReadGraph6File(path)) {
      out.push_back({path.filename().string() + ":" +
                         std::to_string(e.line_number) + ":" + e.text,
                     std::move(e.graph)});
    }
  }
  return out;
}

void Append(Claims& out, Claims more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()),
             std::make_move_iterator(more.end()));
}

// Applies a per-graph check to every corpus graph and concatenates.
Claims OverCorpus(const SuiteOptions& options,
                  const std::function<Claims(const Named&)>& check) {
  const std::vector<Named> corpus = LoadCorpus(options);
  const auto parts = ParallelMap<Claims>(
      static_cast<int>(corpus.size()), options.workers,
      [&](int i) { return check(corpus[i]); });
  Claims out;
  for (const Claims& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Claims Filter(Claims in, std::string_view prefix) {
  Claims out;
  for (ClaimResult& r : in) {
    if (r.claim.starts_with(prefix) || r.verdict == Verdict::kBudgetExceeded) {
      out.push_back(std::move(r));
    }
  }
  return out;
}

Claims PathsCycles(const SuiteOptions&) {
  Claims out;
  for (int n = 3; n <= 10; ++n) {
    GraphValues values(Path(n));
    const std::string inst = "path:" + std::to_string(n);
    out.push_back(MakeClaim("paths.d-value", inst, std::to_string(n - 2),
                            values.D().ToString()));
    out.push_back(MakeClaim("paths.s-value", inst, std::to_string(n - 1),
                            values.S().ToString()));
  }
  for (int n = 4; n <= 8; ++n) {
    const Graph c = Cycle(n);
    const std::string inst = "cycle:" + std::to_string(n);
    const PredominationScan scan = ScanPredomination(c, inst);
    out.push_back(MakeClaim("cycles.d-value", inst, std::to_string(n - 2),
                            scan.base.ToString()));
    for (int v = 0; v < n; ++v) {
      out.push_back(MakeClaim("cycles.predominated-vertex",
                              inst + " v=" + std::to_string(v),
                              std::to_string(n - 3),
                              scan.per_vertex[v].ToString()));
    }
  }
  return out;
}

std::vector<Named> SmallNamedGraphs() {
  std::vector<Named> out;
  for (const char* spec : {"complete:4", "star:4", "path:4", "cycle:4",
                           "cycle:5", "join:empty:2,empty:3", "raise",
                           "gn:2", "cl:4", "hamming:2,3"}) {
    out.push_back({spec, BuildFamily(spec)});
  }
  return out;
}

Claims OverNamedAndCorpus(const SuiteOptions& options,
                          const std::function<Claims(const Named&)>& check) {
  Claims out;
  for (const Named& g : SmallNamedGraphs()) Append(out, check(g));
  if (!options.corpus.empty()) Append(out, OverCorpus(options, check));
  return out;
}

Claims SmallValues(const SuiteOptions& options) {
  return OverNamedAndCorpus(options, [](const Named& g) {
    return CheckSmallValues(g.graph, g.name);
  });
}

Claims DiameterGroup(const SuiteOptions& options) {
  Claims out;
  {
    const Graph p8 = Path(8);
    GraphValues values(p8);
    const int diam = Diameter(p8);
    out.push_back(MakeClaim(
        "diameter-bounds.tight", "path:8 diam=" + std::to_string(diam),
        "diam = γ_cg+1 = γ'_cg",
        (values.D() == GameValue::Finite(diam - 1) &&
         values.S() == GameValue::Finite(diam))
            ? "diam = γ_cg+1 = γ'_cg"
            : "γ_cg=" + values.D().ToString() +
                  " γ'_cg=" + values.S().ToString()));
  }
  Append(out, OverNamedAndCorpus(options, [](const Named& g) {
           return Claims{CheckDiameterBounds(g.graph, g.name)};
         }));
  return out;
}

Claims HammingGroup(const SuiteOptions&) {
  Claims out;
  for (int m : {4, 5}) {
    const int factors[] = {2, m};
    GraphValues values(Hamming(factors));
    const std::string inst = "hamming:2," + std::to_string(m);
    out.push_back(MakeClaim("hamming.values", inst, "(3,2)",
                            "(" + values.D().ToString() + "," +
                                values.S().ToString() + ")"));
  }
  return out;
}

Claims StallerStart(const SuiteOptions& options) {
  Claims out;
  for (int n = 2; n <= 4; ++n) Append(out, CheckGadgetChain(n));
  Append(out, OverNamedAndCorpus(options, [](const Named& g) {
           return Claims{CheckStallerStartBounds(g.graph, g.name)};
         }));
  return out;
}

Claims SkipGroup(const SuiteOptions& options) {
  Claims out;
  for (int n = 3; n <= 8; ++n) {
    Append(out, Filter(CheckSkipAndPass(Path(n), "path:" + std::to_string(n),
                                        SkipExpectation{n - 2, n - 2}),
                       "skip."));
  }
  Append(out, Filter(CheckSkipAndPass(FanChain(2), "fan:2",
                                      SkipExpectation{3, 4}),
                     "skip."));
  CheckOptions stretch;
  stretch.solve.time_budget = options.stretch_budget;
  Append(out, Filter(CheckSkipAndPass(HatChain(1), "hat:1",
                                      SkipExpectation{6, 5}, stretch),
                     "skip."));
  Append(out, OverNamedAndCorpus(options, [](const Named& g) {
           return Filter(CheckSkipAndPass(g.graph, g.name), "skip.");
         }));
  return out;
}

Claims PassGroup(const SuiteOptions& options) {
  Claims out;
  for (int n = 3; n <= 8; ++n) {
    Append(out, Filter(CheckSkipAndPass(Path(n), "path:" + std::to_string(n)),
                       "pass."));
  }
  Append(out, OverNamedAndCorpus(options, [](const Named& g) {
           return Filter(CheckSkipAndPass(g.graph, g.name), "pass.");
         }));
  return out;
}

Claims Lexicographic(const SuiteOptions& options) {
  const std::vector<std::string> gs = {"path:2",  "path:3",     "path:4",
                                       "cycle:4", "cycle:5",    "complete:2",
                                       "complete:3"};
  const std::vector<std::string> hs = {"complete:1", "complete:2",
                                       "complete:3", "path:3",
                                       "path:4",     "cycle:4"};
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const std::string& g : gs) {
    for (const std::string& h : hs) {
      if (BuildFamily(g).order() * BuildFamily(h).order() <= 20) {
        pairs.emplace_back(g, h);
      }
    }
  }
  const auto parts = ParallelMap<Claims>(
      static_cast<int>(pairs.size()), options.workers, [&](int i) {
        const auto& [g, h] = pairs[i];
        return CheckLexicographic(BuildFamily(g), g, BuildFamily(h), h);
      });
  Claims out;
  for (const Claims& p : parts) Append(out, p);
  return out;
}

Claims Predomination(const SuiteOptions& options) {
  Claims out;
  {
    const Graph fig = PredominationIncreaseGraph();
    const int c = fig.FindLabel("c").value();
    GraphValues values(fig);
    out.push_back(MakeClaim("predomination.increase-graph", "raise",
                            "7", values.D().ToString()));
    out.push_back(MakeClaim(
        "predomination.increase-graph", "raise|c", "8",
        values.Value(Variant::kDGame, 0, VertexSet::Single(c)).ToString()));
  }
  {
    // P_5 on indices 0..4 with the middle vertex 2.
    const Graph p5 = Path(5);
    GameConfig s_game{Variant::kSGame, 0, VertexSet::Single(2)};
    out.push_back(MakeClaim(
        "predomination.stuck", "path:5|{2} s-game", "NEVER",
        Solver(p5, s_game).Value(GameState::Initial(s_game)).ToString()));
    GameConfig d_game{Variant::kDGame, 0, VertexSet::Single(2)};
    const auto kind = [&](const GameConfig& cfg, VertexSet played) {
      const GameStatus st = Status(p5, cfg, GameState{played, 0});
      return std::string(st.kind == GameStatus::Kind::kStuck ? "stuck"
                         : st.kind == GameStatus::Kind::kWon ? "won"
                                                             : "ongoing");
    };
    out.push_back(MakeClaim("predomination.stuck",
                            "path:5|{2} played={0}", "stuck",
                            kind(d_game, VertexSet::Single(0))));
    GameConfig wide{Variant::kDGame, 0,
                    VertexSet::Single(1) | VertexSet::Single(2) |
                        VertexSet::Single(3)};
    out.push_back(MakeClaim("predomination.stuck",
                            "path:5|{1,2,3} played={1}", "stuck",
                            kind(wide, VertexSet::Single(1))));
  }
  for (const char* spec : {"path:6", "star:5", "raise"}) {
    Append(out, CheckCutVertex(BuildFamily(spec), spec));
  }
  for (int i = 0; i < 50; ++i) {
    const int n = 2 + i % 11;
    const uint64_t seed = 1000 + i;
    out.push_back(CheckTree(RandomTree(n, seed),
                            "tree:" + std::to_string(n) + "," +
                                std::to_string(seed)));
  }
  if (!options.corpus.empty()) {
    Append(out, OverCorpus(options, [](const Named& g) {
             return CheckCutVertex(g.graph, g.name);
           }));
  }
  return out;
}

Claims Ladders(const SuiteOptions& options) {
  const auto parts = ParallelMap<Claims>(
      4, options.workers, [](int i) { return CheckLadders(4 + i); });
  Claims out;
  for (const Claims& p : parts) Append(out, p);
  return out;
}

Claims Oracle(const SuiteOptions& options) {
  Claims out;
  for (const char* spec : {"path:5", "cycle:5", "star:4", "complete:3",
                           "gn:2", "hamming:2,3"}) {
    out.push_back(CheckOracleEquivalence(BuildFamily(spec), spec));
  }
  if (!options.corpus.empty()) {
    Append(out, OverCorpus(options, [](const Named& g) {
             return Claims{CheckOracleEquivalence(g.graph, g.name)};
           }));
  }
  return out;
}

using GroupFn = Claims (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, GroupFn>>& Registry() {
  static const std::vector<std::pair<std::string, GroupFn>> kGroups = {
      {"paths-cycles", PathsCycles}, {"small-values", SmallValues},
      {"diameter", DiameterGroup},   {"hamming", HammingGroup},
      {"staller-start", StallerStart}, {"skip", SkipGroup},
      {"pass", PassGroup},           {"lexicographic", Lexicographic},
      {"predomination", Predomination}, {"ladders", Ladders},
      {"oracle", Oracle},
  };
  return kGroups;
}

}  // namespace

const std::vector<std::string>& SuiteGroups() {
  static const std::vector<std::string> kNames = [] {
    std::vector<std::string> names;
    for (const auto& [name, fn] : Registry()) names.push_back(name);
    return names;
  }();
  return kNames;
}

std::vector<ClaimResult> RunGroup(const std::string& group,
                                  const SuiteOptions& options) {
  for (const auto& [name, fn] : Registry()) {
    if (name == group) return fn(options);
  }
  throw std::invalid_argument("unknown verification group '" + group + "'");
}

std::vector<ClaimResult> RunSuite(
    const std::vector<std::string>& only, const SuiteOptions& options,
    const std::function<void(const std::string&,
                             const std::vector<ClaimResult>&)>& sink) {
  for (const std::string& name : only) {
    bool known = false;
    for (const std::string& g : SuiteGroups()) known = known || g == name;
    if (!known) {
      throw std::invalid_argument("unknown verification group '" + name + "'");
    }
  }
  for (const auto& path : options.corpus) {
    if (!std::filesystem::exists(path)) {
      throw std::runtime_error("corpus file not found: " + path.string());
    }
  }
  std::vector<ClaimResult> out;
  for (const std::string& group : SuiteGroups()) {
    if (!only.empty() &&
        std::find(only.begin(), only.end(), group) == only.end()) {
      continue;
    }
    std::vector<ClaimResult> part = RunGroup(group, options);
    if (sink) sink(group, part);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace cdgame
