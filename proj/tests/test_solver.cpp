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

#include <algorithm>
#include <random>
#include <vector>

#include "cdgame/families.h"
#include "cdgame/solver.h"
#include "doctest.h"
#include "test_util.h"

namespace cdgame {
namespace {

GameConfig Config(Variant v, int passes = 0, VertexSet s = {}) {
  GameConfig cfg;
  cfg.variant = v;
  cfg.pass_budget = passes;
  cfg.predominated = s;
  return cfg;
}

GameValue Value(const Graph& g, Variant v, VertexSet s = {}, int passes = 0) {
  return Solve(g, Config(v, passes, s)).value;
}

constexpr int kNever = 1000;

// Third, matrix-based minimax used as the test's own oracle. Turn order is
// restated from the rules: skip variants give the first two turns to one
// player, then alternate.
int TestMinimax(const std::vector<std::vector<bool>>& m,
                std::vector<bool>& played, std::vector<bool> dominated,
                int turn, int variant, int passes) {
  const int n = static_cast<int>(m.size());
  bool done = true;
  for (int v = 0; v < n; ++v) done = done && dominated[v];
  int count = 0;
  for (bool b : played) count += b;
  if (done) return count;
  bool dominator;
  if (variant == 0) dominator = turn % 2 == 1;
  else if (variant == 1) dominator = turn % 2 == 0;
  else if (variant == 2) dominator = turn <= 2 || turn % 2 == 0;
  else dominator = turn > 2 && turn % 2 == 1;
  int best = dominator ? kNever + 1 : -1;
  bool any = false;
  for (int v = 0; v < n; ++v) {
    if (played[v]) continue;
    bool fresh = !dominated[v], touches = count == 0;
    for (int u = 0; u < n; ++u) {
      if (m[v][u] && !dominated[u]) fresh = true;
      if (m[v][u] && played[u]) touches = true;
    }
    if (!fresh || !touches) continue;
    any = true;
    std::vector<bool> next = dominated;
    next[v] = true;
    for (int u = 0; u < n; ++u) {
      if (m[v][u]) next[u] = true;
    }
    played[v] = true;
    const int r = TestMinimax(m, played, next, turn + 1, variant, passes);
    played[v] = false;
    best = dominator ? std::min(best, r) : std::max(best, r);
  }
  if (!any) return kNever;
  if (!dominator && passes > 0) {
    best = std::max(best,
                    TestMinimax(m, played, dominated, turn + 1, variant,
                                passes - 1));
  }
  return best;
}

int TestValue(const Graph& g, int variant, VertexSet s, int passes) {
  const auto m = testing::Matrix(g);
  std::vector<bool> played(g.order()), dominated(g.order());
  for (int v : s) dominated[v] = true;
  return TestMinimax(m, played, dominated, 1, variant, passes);
}

TEST_CASE("game value ordering and printing") {
  CHECK(GameValue::Finite(3) < GameValue::Finite(4));
  CHECK(GameValue::Finite(1000000) < GameValue::Never());
  CHECK(GameValue::Never().ToString() == "NEVER");
  CHECK(GameValue::Finite(7).ToString() == "7");
  CHECK_THROWS(GameValue::Never().moves());
}

TEST_CASE("known values") {
  CHECK(Value(Path(4), Variant::kDGame) == GameValue::Finite(2));
  CHECK(Value(Path(4), Variant::kSGame) == GameValue::Finite(3));
  CHECK(Value(GadgetChain(3), Variant::kDGame) == GameValue::Finite(3));
  CHECK(Value(GadgetChain(3), Variant::kSGame) == GameValue::Finite(6));
  const int k24[] = {2, 4};
  CHECK(Value(Hamming(k24), Variant::kDGame) == GameValue::Finite(3));
  CHECK(Value(Hamming(k24), Variant::kSGame) == GameValue::Finite(2));
  CHECK(Value(Path(5), Variant::kSGame, VertexSet::Single(2)).is_never());
  const Graph fig = PredominationIncreaseGraph();
  CHECK(Value(fig, Variant::kDGame) == GameValue::Finite(7));
  CHECK(Value(fig, Variant::kDGame, VertexSet::Single(*fig.FindLabel("c"))) ==
        GameValue::Finite(8));
  CHECK(Value(Path(5), Variant::kStallerFirstSkip) == GameValue::Finite(3));
  CHECK(Value(Graph(1), Variant::kDGame) == GameValue::Finite(1));
  CHECK(Value(Graph(1), Variant::kSGame) == GameValue::Finite(1));
}

TEST_CASE("naive oracle agrees on named cases") {
  CHECK(SolveNaive(Cycle(5), GameConfig{}) == GameValue::Finite(3));
  CHECK(SolveNaive(Cycle(5), Config(Variant::kDGame, 0, VertexSet::Single(0))) ==
        GameValue::Finite(2));
  CHECK(SolveNaive(Path(5), Config(Variant::kSGame, 0, VertexSet::Single(2)))
            .is_never());
}

TEST_CASE("optimal moves") {
  CHECK(OptimalMove(Path(4), GameConfig{}, GameState{}) == Action::Vertex(1));
  CHECK(OptimalMove(Complete(3), GameConfig{}, GameState{}) ==
        Action::Vertex(0));
  const Graph g3 = GadgetChain(3);
  const Action open = OptimalMove(g3, GameConfig{}, GameState{});
  CHECK(g3.label(open.vertex) == "u_3");
  CHECK_THROWS_AS(
      OptimalMove(Complete(3), GameConfig{},
                  GameState{VertexSet::Single(0), 0}),
      std::logic_error);
}

TEST_CASE("predominated values") {
  CHECK(ValueWithPredominated(Path(7), Variant::kDGame, VertexSet::Single(0)) ==
        GameValue::Finite(4));
  for (int v = 1; v <= 5; ++v) {
    CHECK(ValueWithPredominated(Path(7), Variant::kDGame,
                                VertexSet::Single(v)) == GameValue::Finite(5));
  }
  const Graph cl5 = CircularLadder(5);
  for (int v = 0; v < cl5.order(); ++v) {
    CHECK(ValueWithPredominated(cl5, Variant::kDGame, VertexSet::Single(v)) ==
          GameValue::Finite(5));
  }
}

TEST_CASE("memo solver, naive oracle and the test oracle agree") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 7;
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 2) edges.emplace_back(u, v);
      }
    }
    const Graph g(n, edges);
    const uint64_t s = trial % 3 == 0 ? 0 : rng() & g.vertices().bits();
    for (int variant = 0; variant < 4; ++variant) {
      for (int passes = 0; passes <= (variant < 2 ? 2 : 0); ++passes) {
        const GameConfig cfg =
            Config(static_cast<Variant>(variant), passes, VertexSet(s));
        const int expect = TestValue(g, variant, VertexSet(s), passes);
        const GameValue memo = Solve(g, cfg).value;
        uint64_t naive_states = 0;
        const GameValue naive = SolveNaive(g, cfg, &naive_states);
        CHECK(naive == memo);
        if (expect == kNever) {
          CHECK(memo.is_never());
        } else {
          CHECK(memo == GameValue::Finite(expect));
        }
        Solver solver(g, cfg);
        solver.Value(GameState::Initial(cfg));
        CHECK(solver.states_expanded() <= naive_states);
      }
    }
  }
}

TEST_CASE("principal line replays to the reported value") {
  for (const char* spec : {"path:6", "cycle:7", "gn:3", "raise", "cl:5",
                           "fan:2", "hamming:2,4", "lex:path:3,path:3"}) {
    const Graph g = BuildFamily(spec);
    for (Variant v : {Variant::kDGame, Variant::kSGame,
                      Variant::kStallerFirstSkip,
                      Variant::kDominatorFirstSkip}) {
      for (int passes = 0; passes <= (v <= Variant::kSGame ? 1 : 0);
           ++passes) {
        const GameConfig cfg = Config(v, passes);
        const SolveReport r = Solve(g, cfg);
        GameState st = GameState::Initial(cfg);
        for (const PlyRecord& ply : r.principal_line) {
          CHECK(ply.player == Mover(cfg, st));
          st = ApplyAction(g, cfg, st, ply.action);
        }
        const GameStatus status = Status(g, cfg, st);
        if (r.value.is_never()) {
          CHECK(status.kind == GameStatus::Kind::kStuck);
        } else {
          CHECK(status.kind == GameStatus::Kind::kWon);
          CHECK(status.moves == r.value.moves());
        }
      }
    }
  }
}

TEST_CASE("threaded search matches single-threaded") {
  for (const char* spec : {"fan:3", "hat:1", "gn:4", "cl:6", "lex:cycle:5,path:3"}) {
    const Graph g = BuildFamily(spec);
    for (Variant v : {Variant::kDGame, Variant::kSGame}) {
      SolveOptions many;
      many.threads = 4;
      const SolveReport a = Solve(g, Config(v));
      const SolveReport b = Solve(g, Config(v), many);
      CHECK(a.value == b.value);
      CHECK(a.principal_line.size() == b.principal_line.size());
    }
  }
}

TEST_CASE("time budget") {
  SolveOptions tight;
  tight.time_budget = std::chrono::milliseconds(0);
  CHECK_THROWS_AS(Solve(LexicographicProduct(Cycle(8), Path(4)), GameConfig{},
                        tight),
                  BudgetExceeded);
  SolveOptions loose;
  loose.time_budget = std::chrono::milliseconds(60000);
  CHECK(Solve(Path(6), GameConfig{}, loose).value == GameValue::Finite(4));
}

}  // namespace
}  // namespace cdgame
