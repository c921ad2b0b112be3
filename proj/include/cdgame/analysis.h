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

#ifndef CDGAME_ANALYSIS_H_
#define CDGAME_ANALYSIS_H_

// Claim checkers: each combines exact game values into pass/fail records.

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cdgame/graph.h"
#include "cdgame/solver.h"
#include "json.hpp"

namespace cdgame {

enum class Verdict { kPass, kFail, kBudgetExceeded };

std::string_view VerdictName(Verdict v);

struct ClaimResult {
  std::string claim;
  std::string instance;
  std::string expected;
  std::string observed;
  Verdict verdict = Verdict::kFail;
  double elapsed_ms = 0;

  nlohmann::json ToJson(bool with_timing = true) const;
};

// verdict = pass iff expected == observed.
ClaimResult MakeClaim(std::string claim, std::string instance,
                      std::string expected, std::string observed);

// Game values of one graph, solved on demand and cached per configuration.
class GraphValues {
 public:
  GraphValues(const Graph& g, SolveOptions options = {})
      : graph_(g), options_(options) {}

  const Graph& graph() const { return graph_; }
  GameValue Value(Variant variant, int passes = 0, VertexSet predominated = {});
  GameValue D() { return Value(Variant::kDGame); }
  GameValue S() { return Value(Variant::kSGame); }
  GameValue DSkip() { return Value(Variant::kStallerFirstSkip); }
  GameValue SSkip() { return Value(Variant::kDominatorFirstSkip); }
  // Optimal opening of the plain D-game.
  int DominatorOpening();

 private:
  Graph graph_;
  SolveOptions options_;
  std::map<std::tuple<Variant, int, uint64_t>, GameValue> cache_;
};

struct CheckOptions {
  SolveOptions solve;
};

// Characterizations of graphs with D-/S-game value 1 and 2, as four
// biconditionals. G connected.
std::vector<ClaimResult> CheckSmallValues(const Graph& g,
                                          const std::string& name,
                                          const CheckOptions& opt = {});

// diam <= γ_cg + 1 and diam <= γ'_cg.
ClaimResult CheckDiameterBounds(const Graph& g, const std::string& name,
                                const CheckOptions& opt = {});

// γ_cg - 1 <= γ'_cg <= 2 γ_cg.
ClaimResult CheckStallerStartBounds(const Graph& g, const std::string& name,
                                    const CheckOptions& opt = {});

// D-value n, S-value 2n, and the ratio S = 2D for the gadget chain.
std::vector<ClaimResult> CheckGadgetChain(int n, const CheckOptions& opt = {});

// Direct values of G[H] against the case formulas in terms of G and H, for
// both games, plus γ_cg(G) <= γ_cg(G[H]) <= γ_cg(G) + 2 when
// γ_cg(H) >= 2 and |V(G)| >= 2.
std::vector<ClaimResult> CheckLexicographic(const Graph& g,
                                            const std::string& g_name,
                                            const Graph& h,
                                            const std::string& h_name,
                                            const CheckOptions& opt = {});

// CL_n and ML_n: plain value 2(n-2) and 2(n-2)-1 with any single vertex
// predominated, checked at every vertex.
std::vector<ClaimResult> CheckLadders(int n, const CheckOptions& opt = {});

struct PredominationScan {
  std::string name;
  GameValue base = GameValue::Never();
  std::vector<GameValue> per_vertex;  // γ_cg(G|v)
  std::vector<int> never_vertices;
  bool all_different = false;         // γ_cg(G|v) != γ_cg(G) for all v
  bool some_increase = false;         // some finite γ_cg(G|v) > γ_cg(G)
  bool candidate = false;             // all_different && some_increase
  std::optional<int> k_plus;          // max finite γ_cg(G|v) - γ_cg(G)
  std::optional<int> k_minus;         // max finite γ_cg(G) - γ_cg(G|v)

  nlohmann::json ToJson() const;
};

// Per-vertex predomination table for the D-game. Never values are listed
// separately and kept out of k_plus / k_minus.
PredominationScan ScanPredomination(const Graph& g, const std::string& name,
                                    const CheckOptions& opt = {});

// For every cut vertex u: γ_cg(G|u) >= γ_cg(G). Also that the optimal D-game
// opening d satisfies γ_cg(G|d) <= γ_cg(G).
std::vector<ClaimResult> CheckCutVertex(const Graph& g,
                                        const std::string& name,
                                        const CheckOptions& opt = {});

struct SkipExpectation {
  int d_value;
  int d_skip_value;
};

// |γ̃_cg - γ_cg| <= 1, |γ̃'_cg - γ'_cg| <= 1, and for Staller passes
// γ_cg <= γ̂^k <= γ_cg + k with γ̂^k monotone in k, k in {1, 2}. With an
// expectation, also the exact D and Staller-first-skip values.
std::vector<ClaimResult> CheckSkipAndPass(
    const Graph& g, const std::string& name,
    std::optional<SkipExpectation> expect = std::nullopt,
    const CheckOptions& opt = {});

// Trees: γ_cg(T) = γ_c(T) = γ_cg(T|v) for every non-leaf v.
ClaimResult CheckTree(const Graph& tree, const std::string& name,
                      const CheckOptions& opt = {});

// Memoized solver against the naive oracle: all four variants, passes
// {0,1,2} where defined, predominated set empty or any singleton. Also that
// the memoized search never expands more states than the oracle.
ClaimResult CheckOracleEquivalence(const Graph& g, const std::string& name);

}  // namespace cdgame

#endif  // CDGAME_ANALYSIS_H_
