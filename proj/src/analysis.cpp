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

#include "cdgame/analysis.h"

#include <algorithm>
#include <chrono>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cdgame/families.h"

namespace cdgame {

std::string_view VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kBudgetExceeded:
      return "budget_exceeded";
  }
  return "?";
}

nlohmann::json ClaimResult::ToJson(bool with_timing) const {
  nlohmann::json j = {{"claim", claim},
                      {"instance", instance},
                      {"expected", expected},
                      {"observed", observed},
                      {"verdict", VerdictName(verdict)}};
  if (with_timing) j["elapsed_ms"] = elapsed_ms;
  return j;
}

ClaimResult MakeClaim(std::string claim, std::string instance,
                      std::string expected, std::string observed) {
  ClaimResult r;
  r.verdict = expected == observed ? Verdict::kPass : Verdict::kFail;
  r.claim = std::move(claim);
  r.instance = std::move(instance);
  r.expected = std::move(expected);
  r.observed = std::move(observed);
  return r;
}

GameValue GraphValues::Value(Variant variant, int passes,
                             VertexSet predominated) {
  const auto key = std::make_tuple(variant, passes, predominated.bits());
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  GameConfig cfg;
  cfg.variant = variant;
  cfg.pass_budget = passes;
  cfg.predominated = predominated;
  Solver solver(graph_, cfg, options_);
  const GameValue v = solver.Value(GameState::Initial(cfg));
  cache_.emplace(key, v);
  return v;
}

int GraphValues::DominatorOpening() {
  GameConfig cfg;
  Solver solver(graph_, cfg, options_);
  return solver.OptimalMove(GameState::Initial(cfg)).vertex;
}

namespace {

std::string Str(bool b) { return b ? "true" : "false"; }
std::string Str(GameValue v) { return v.ToString(); }
std::string Holds(bool b) { return b ? "holds" : "violated"; }

// Runs a check body, stamps elapsed time on its claims, and converts an
// exhausted time budget into a single budget_exceeded record.
template <typename Body>
std::vector<ClaimResult> Guard(const std::string& claim,
                               const std::string& instance, Body body) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<ClaimResult> out;
  try {
    out = body();
  } catch (const BudgetExceeded& e) {
    ClaimResult r;
    r.claim = claim;
    r.instance = instance;
    r.expected = "solved within budget";
    r.observed = e.what();
    r.verdict = Verdict::kBudgetExceeded;
    out = {r};
  }
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  for (ClaimResult& r : out) r.elapsed_ms = ms;
  return out;
}

// a <= b over GameValue, with Never on either side making the inequality
// fail unless both are Never.
bool LessEq(GameValue a, GameValue b) { return a <= b; }

GameValue Plus(GameValue v, int k) {
  return v.is_never() ? v : GameValue::Finite(v.moves() + k);
}

GameValue Minus(GameValue v, int k) {
  return v.is_never() ? v : GameValue::Finite(v.moves() - k);
}

}  // namespace

std::vector<ClaimResult> CheckSmallValues(const Graph& g,
                                          const std::string& name,
                                          const CheckOptions& opt) {
  return Guard("small-values", name, [&] {
    GraphValues values(g, opt.solve);
    const GameValue d = values.D();
    const GameValue s = values.S();
    const std::string inst = name + ": γ_cg=" + Str(d) + " γ'_cg=" + Str(s);
    return std::vector<ClaimResult>{
        MakeClaim("small-values.d1-iff-universal", inst,
                  Str(MaxDegree(g) == g.order() - 1),
                  Str(d == GameValue::Finite(1))),
        MakeClaim("small-values.s1-iff-complete", inst, Str(IsComplete(g)),
                  Str(s == GameValue::Finite(1))),
        MakeClaim("small-values.d2-iff-join-two-noncomplete", inst,
                  Str(IsJoinOfTwoNonComplete(g)),
                  Str(d == GameValue::Finite(2))),
        MakeClaim("small-values.s2-iff-join-some-noncomplete", inst,
                  Str(IsJoinWithSomeNonComplete(g)),
                  Str(s == GameValue::Finite(2))),
    };
  });
}

ClaimResult CheckDiameterBounds(const Graph& g, const std::string& name,
                                const CheckOptions& opt) {
  return Guard("diameter-bounds", name, [&] {
           GraphValues values(g, opt.solve);
           const int diam = Diameter(g);
           const GameValue d = values.D();
           const GameValue s = values.S();
           const bool ok = LessEq(GameValue::Finite(diam), Plus(d, 1)) &&
                           LessEq(GameValue::Finite(diam), s);
           return std::vector<ClaimResult>{MakeClaim(
               "diameter-bounds",
               name + ": diam=" + std::to_string(diam) + " γ_cg=" + Str(d) +
                   " γ'_cg=" + Str(s),
               "holds", Holds(ok))};
         })
      .front();
}

ClaimResult CheckStallerStartBounds(const Graph& g, const std::string& name,
                                    const CheckOptions& opt) {
  return Guard("staller-start-bounds", name, [&] {
           GraphValues values(g, opt.solve);
           const GameValue d = values.D();
           const GameValue s = values.S();
           const bool ok =
               d.is_finite() && s.is_finite() &&
               d.moves() - 1 <= s.moves() && s.moves() <= 2 * d.moves();
           return std::vector<ClaimResult>{
               MakeClaim("staller-start-bounds",
                         name + ": γ_cg=" + Str(d) + " γ'_cg=" + Str(s),
                         "holds", Holds(ok))};
         })
      .front();
}

std::vector<ClaimResult> CheckGadgetChain(int n, const CheckOptions& opt) {
  const std::string inst = "gn:" + std::to_string(n);
  return Guard("gadget-chain", inst, [&] {
    const Graph g = GadgetChain(n);
    GraphValues values(g, opt.solve);
    const GameValue d = values.D();
    const GameValue s = values.S();
    return std::vector<ClaimResult>{
        MakeClaim("gadget-chain.d-value", inst, std::to_string(n), Str(d)),
        MakeClaim("gadget-chain.s-value", inst, std::to_string(2 * n), Str(s)),
        MakeClaim("gadget-chain.s-is-twice-d", inst, "true",
                  Str(d.is_finite() && s == GameValue::Finite(2 * d.moves()))),
    };
  });
}

std::vector<ClaimResult> CheckLexicographic(const Graph& g,
                                            const std::string& g_name,
                                            const Graph& h,
                                            const std::string& h_name,
                                            const CheckOptions& opt) {
  const std::string inst = g_name + "[" + h_name + "]";
  return Guard("lexicographic", inst, [&] {
    const Graph product = LexicographicProduct(g, h);
    GraphValues pv(product, opt.solve), gv(g, opt.solve), hv(h, opt.solve);

    GameValue d_formula = GameValue::Never();
    std::string d_case;
    if (g.order() == 1) {
      d_formula = hv.D();
      d_case = "|V(G)|=1";
    } else if (hv.D() == GameValue::Finite(1)) {
      d_formula = gv.D();
      d_case = "γ_cg(H)=1";
    } else {
      d_formula = Plus(gv.DSkip(), 1);
      d_case = "γ_cg(H)>=2";
    }

    GameValue s_formula = GameValue::Never();
    std::string s_case;
    if (g.order() == 1) {
      s_formula = hv.S();
      s_case = "|V(G)|=1";
    } else if (GameValue::Finite(2) <= gv.S()) {
      s_formula = gv.S();
      s_case = "γ'_cg(G)>=2";
    } else if (GameValue::Finite(2) <= hv.S()) {
      s_formula = GameValue::Finite(2);
      s_case = "γ'_cg(G)=1,γ'_cg(H)>=2";
    } else {
      s_formula = hv.S();
      s_case = "γ'_cg(G)=1,γ'_cg(H)=1";
    }

    std::vector<ClaimResult> out = {
        MakeClaim("lexicographic.d-game", inst + " case " + d_case,
                  Str(d_formula), Str(pv.D())),
        MakeClaim("lexicographic.s-game", inst + " case " + s_case,
                  Str(s_formula), Str(pv.S())),
    };
    if (g.order() >= 2 && GameValue::Finite(2) <= hv.D()) {
      const bool ok = LessEq(gv.D(), pv.D()) && LessEq(pv.D(), Plus(gv.D(), 2));
      out.push_back(MakeClaim("lexicographic.d-game-bounds",
                              inst + ": γ_cg(G)=" + Str(gv.D()) +
                                  " γ_cg(G[H])=" + Str(pv.D()),
                              "holds", Holds(ok)));
    }
    return out;
  });
}

std::vector<ClaimResult> CheckLadders(int n, const CheckOptions& opt) {
  std::vector<ClaimResult> out;
  const std::pair<std::string, Graph> ladders[] = {
      {"cl:" + std::to_string(n), CircularLadder(n)},
      {"ml:" + std::to_string(n), MobiusLadder(n)},
  };
  for (const auto& [inst, g] : ladders) {
    auto part = Guard("ladder", inst, [&] {
      GraphValues values(g, opt.solve);
      std::set<GameValue> seen;
      for (int v = 0; v < g.order(); ++v) {
        seen.insert(values.Value(Variant::kDGame, 0, VertexSet::Single(v)));
      }
      std::string observed;
      for (GameValue v : seen) {
        observed += (observed.empty() ? "" : ",") + Str(v);
      }
      return std::vector<ClaimResult>{
          MakeClaim("ladder.plain", inst, std::to_string(2 * (n - 2)),
                    Str(values.D())),
          MakeClaim("ladder.predominated-any-vertex", inst + " all v",
                    std::to_string(2 * (n - 2) - 1), observed),
      };
    });
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

nlohmann::json PredominationScan::ToJson() const {
  nlohmann::json per = nlohmann::json::array();
  for (GameValue v : per_vertex) {
    per.push_back(v.is_never() ? nlohmann::json("NEVER")
                               : nlohmann::json(v.moves()));
  }
  return {{"graph", name},
          {"base", base.is_never() ? nlohmann::json("NEVER")
                                   : nlohmann::json(base.moves())},
          {"per_vertex", per},
          {"never_vertices", never_vertices},
          {"all_different", all_different},
          {"some_increase", some_increase},
          {"candidate", candidate},
          {"k_plus", k_plus ? nlohmann::json(*k_plus) : nlohmann::json()},
          {"k_minus", k_minus ? nlohmann::json(*k_minus) : nlohmann::json()}};
}

PredominationScan ScanPredomination(const Graph& g, const std::string& name,
                                    const CheckOptions& opt) {
  GraphValues values(g, opt.solve);
  PredominationScan scan;
  scan.name = name;
  scan.base = values.D();
  scan.all_different = true;
  for (int v = 0; v < g.order(); ++v) {
    const GameValue pv = values.Value(Variant::kDGame, 0, VertexSet::Single(v));
    scan.per_vertex.push_back(pv);
    if (pv == scan.base) scan.all_different = false;
    if (pv.is_never()) {
      scan.never_vertices.push_back(v);
      continue;
    }
    if (scan.base.is_never()) continue;
    const int diff = pv.moves() - scan.base.moves();
    if (diff > 0) scan.some_increase = true;
    scan.k_plus = std::max(scan.k_plus.value_or(diff), diff);
    scan.k_minus = std::max(scan.k_minus.value_or(-diff), -diff);
  }
  scan.candidate = scan.all_different && scan.some_increase;
  return scan;
}

std::vector<ClaimResult> CheckCutVertex(const Graph& g,
                                        const std::string& name,
                                        const CheckOptions& opt) {
  return Guard("cut-vertex", name, [&] {
    GraphValues values(g, opt.solve);
    const GameValue base = values.D();
    std::vector<ClaimResult> out;
    for (int u : CutVertices(g)) {
      const GameValue pu = values.Value(Variant::kDGame, 0, VertexSet::Single(u));
      out.push_back(MakeClaim("cut-vertex.no-decrease",
                              name + " u=" + g.label(u) + ": γ_cg=" +
                                  Str(base) + " γ_cg(G|u)=" + Str(pu),
                              "holds", Holds(LessEq(base, pu))));
    }
    const int d1 = values.DominatorOpening();
    const GameValue pd = values.Value(Variant::kDGame, 0, VertexSet::Single(d1));
    out.push_back(MakeClaim("cut-vertex.opening-no-increase",
                            name + " d1=" + g.label(d1) + ": γ_cg=" +
                                Str(base) + " γ_cg(G|d1)=" + Str(pd),
                            "holds", Holds(LessEq(pd, base))));
    return out;
  });
}

std::vector<ClaimResult> CheckSkipAndPass(const Graph& g,
                                          const std::string& name,
                                          std::optional<SkipExpectation> expect,
                                          const CheckOptions& opt) {
  return Guard("skip-pass", name, [&] {
    GraphValues values(g, opt.solve);
    const GameValue d = values.D(), s = values.S();
    const GameValue dt = values.DSkip(), st = values.SSkip();
    std::vector<ClaimResult> out;
    out.push_back(MakeClaim(
        "skip.staller-first",
        name + ": γ_cg=" + Str(d) + " γ̃_cg=" + Str(dt), "holds",
        Holds(LessEq(Minus(d, 1), dt) && LessEq(dt, Plus(d, 1)))));
    out.push_back(MakeClaim(
        "skip.dominator-first",
        name + ": γ'_cg=" + Str(s) + " γ̃'_cg=" + Str(st), "holds",
        Holds(LessEq(Minus(s, 1), st) && LessEq(st, Plus(s, 1)))));
    GameValue previous = d;
    for (int k = 1; k <= 2; ++k) {
      const GameValue pk = values.Value(Variant::kDGame, k);
      out.push_back(MakeClaim(
          "pass.bounds",
          name + " k=" + std::to_string(k) + ": γ_cg=" + Str(d) +
              " γ̂_cg=" + Str(pk),
          "holds", Holds(LessEq(d, pk) && LessEq(pk, Plus(d, k)))));
      out.push_back(MakeClaim("pass.monotone",
                              name + " k=" + std::to_string(k) + ": " +
                                  Str(previous) + " <= " + Str(pk),
                              "holds", Holds(LessEq(previous, pk))));
      previous = pk;
    }
    if (expect) {
      out.push_back(MakeClaim("skip.exact-d", name,
                              std::to_string(expect->d_value), Str(d)));
      out.push_back(MakeClaim("skip.exact-staller-first", name,
                              std::to_string(expect->d_skip_value), Str(dt)));
    }
    return out;
  });
}

ClaimResult CheckTree(const Graph& tree, const std::string& name,
                      const CheckOptions& opt) {
  return Guard("tree", name, [&] {
           GraphValues values(tree, opt.solve);
           const int gc = ConnectedDominationNumber(tree);
           bool ok = values.D() == GameValue::Finite(gc);
           for (int v = 0; v < tree.order() && ok; ++v) {
             if (tree.degree(v) < 2) continue;
             ok = values.Value(Variant::kDGame, 0, VertexSet::Single(v)) ==
                  GameValue::Finite(gc);
           }
           return std::vector<ClaimResult>{
               MakeClaim("tree.predomination-invariant",
                         name + ": γ_c=" + std::to_string(gc) +
                             " γ_cg=" + Str(values.D()),
                         "holds", Holds(ok))};
         })
      .front();
}

ClaimResult CheckOracleEquivalence(const Graph& g, const std::string& name) {
  return Guard("oracle-equivalence", name, [&] {
           std::vector<GameConfig> configs;
           std::vector<VertexSet> sets = {VertexSet()};
           for (int v = 0; v < g.order(); ++v) {
             sets.push_back(VertexSet::Single(v));
           }
           for (Variant variant :
                {Variant::kDGame, Variant::kSGame, Variant::kStallerFirstSkip,
                 Variant::kDominatorFirstSkip}) {
             const bool passes = variant == Variant::kDGame ||
                                 variant == Variant::kSGame;
             for (int k = 0; k <= (passes ? 2 : 0); ++k) {
               for (VertexSet s : sets) {
                 configs.push_back({variant, k, s});
               }
             }
           }
           std::string observed = "agree";
           for (const GameConfig& cfg : configs) {
             uint64_t naive_states = 0;
             const GameValue naive = SolveNaive(g, cfg, &naive_states);
             Solver solver(g, cfg);
             const GameValue memo = solver.Value(GameState::Initial(cfg));
             if (naive != memo || solver.states_expanded() > naive_states) {
               observed = std::string("mismatch at ") +
                          std::string(VariantName(cfg.variant)) +
                          " k=" + std::to_string(cfg.pass_budget) +
                          " S=" + cfg.predominated.ToString() +
                          ": memo=" + Str(memo) + " naive=" + Str(naive) +
                          " states " + std::to_string(solver.states_expanded()) +
                          "/" + std::to_string(naive_states);
               break;
             }
           }
           return std::vector<ClaimResult>{MakeClaim(
               "oracle-equivalence",
               name + " (" + std::to_string(configs.size()) + " configs)",
               "agree", observed)};
         })
      .front();
}

}  // namespace cdgame
