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

#include <random>

#include "cdgame/families.h"
#include "cdgame/game.h"
#include "doctest.h"
#include "test_util.h"

namespace cdgame {
namespace {

VertexSet Set(std::initializer_list<int> vs) {
  VertexSet s;
  for (int v : vs) s = s.with(v);
  return s;
}

GameConfig Config(Variant v, int passes = 0, VertexSet s = {}) {
  GameConfig cfg;
  cfg.variant = v;
  cfg.pass_budget = passes;
  cfg.predominated = s;
  return cfg;
}

TEST_CASE("turn order") {
  CHECK(MoverAt(Variant::kDGame, 1) == Player::kDominator);
  CHECK(MoverAt(Variant::kDGame, 2) == Player::kStaller);
  CHECK(MoverAt(Variant::kSGame, 1) == Player::kStaller);
  CHECK(MoverAt(Variant::kStallerFirstSkip, 1) == Player::kDominator);
  CHECK(MoverAt(Variant::kStallerFirstSkip, 2) == Player::kDominator);
  CHECK(MoverAt(Variant::kStallerFirstSkip, 3) == Player::kStaller);
  CHECK(MoverAt(Variant::kStallerFirstSkip, 4) == Player::kDominator);
  CHECK(MoverAt(Variant::kDominatorFirstSkip, 2) == Player::kStaller);
  CHECK(MoverAt(Variant::kDominatorFirstSkip, 3) == Player::kDominator);
  CHECK(MoverAt(Variant::kDominatorFirstSkip, 4) == Player::kStaller);
  CHECK_THROWS(MoverAt(Variant::kDGame, 0));
}

TEST_CASE("variant names") {
  for (Variant v : {Variant::kDGame, Variant::kSGame, Variant::kStallerFirstSkip,
                    Variant::kDominatorFirstSkip}) {
    CHECK(ParseVariant(VariantName(v)) == v);
  }
  CHECK(ParseVariant("staller-first-skip") == Variant::kStallerFirstSkip);
  CHECK_THROWS(ParseVariant("x"));
}

TEST_CASE("config validation") {
  const Graph g = Path(4);
  CHECK_NOTHROW(Config(Variant::kDGame, 2).Validate(g));
  CHECK_NOTHROW(Config(Variant::kSGame, 1).Validate(g));
  CHECK_THROWS_AS(Config(Variant::kStallerFirstSkip, 1).Validate(g),
                  ConfigError);
  CHECK_THROWS_AS(Config(Variant::kDGame, -1).Validate(g), ConfigError);
  CHECK_THROWS_AS(Config(Variant::kDGame, 0, Set({4})).Validate(g),
                  ConfigError);
}

TEST_CASE("legal moves") {
  const GameConfig plain;
  CHECK(LegalMoves(Path(4), plain, GameState{}) == VertexSet::FirstN(4));
  const Graph p5 = Path(5);
  CHECK(LegalMoves(p5, plain, GameState{Set({0}), 0}) == Set({1}));
  const GameConfig mid = Config(Variant::kDGame, 0, Set({2}));
  const GameState st{Set({0}), 0};
  CHECK(LegalMoves(p5, mid, st).empty());
  CHECK(Dominated(p5, mid, st) == Set({0, 1, 2}));
  CHECK(Status(p5, mid, st).kind == GameStatus::Kind::kStuck);
  // A fully predominated graph still accepts no move: nothing is new.
  const GameConfig all = Config(Variant::kDGame, 0, VertexSet::FirstN(5));
  CHECK(LegalMoves(p5, all, GameState{}).empty());
  CHECK(Status(p5, all, GameState{}).kind == GameStatus::Kind::kWon);
  CHECK(Status(p5, all, GameState{}).moves == 0);
}

TEST_CASE("legal moves against the rule restated on the matrix") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = RandomTree(2 + trial % 15, trial);
    const auto m = testing::Matrix(g);
    const int n = g.order();
    const uint64_t s = rng() & g.vertices().bits() & rng();
    const uint64_t p = trial % 4 == 0 ? 0 : rng() & g.vertices().bits() & rng();
    GameConfig cfg = Config(Variant::kDGame, 0, VertexSet(s));
    uint64_t dom = s;
    for (int u = 0; u < n; ++u) {
      if (!((p >> u) & 1)) continue;
      dom |= uint64_t{1} << u;
      for (int v = 0; v < n; ++v) {
        if (m[u][v]) dom |= uint64_t{1} << v;
      }
    }
    uint64_t expect = 0;
    for (int v = 0; v < n; ++v) {
      bool fresh = !((dom >> v) & 1);
      bool touches = p == 0;
      for (int u = 0; u < n; ++u) {
        if (m[v][u] && !((dom >> u) & 1)) fresh = true;
        if (m[v][u] && ((p >> u) & 1)) touches = true;
      }
      if (fresh && touches) expect |= uint64_t{1} << v;
    }
    const GameState st{VertexSet(p), 0};
    CHECK(Dominated(g, cfg, st).bits() == dom);
    CHECK(LegalMoves(g, cfg, st).bits() == expect);
  }
}

TEST_CASE("applying moves and passes") {
  const Graph p4 = Path(4);
  const GameConfig plain;
  const GameState after = ApplyMove(p4, plain, GameState{Set({1}), 0}, 2);
  CHECK(after.played == Set({1, 2}));
  CHECK(Status(p4, plain, after).kind == GameStatus::Kind::kWon);
  CHECK(Status(p4, plain, after).moves == 2);
  CHECK_THROWS_AS(ApplyMove(p4, plain, GameState{Set({1}), 0}, 3),
                  IllegalMoveError);
  CHECK_THROWS_AS(ApplyMove(p4, plain, GameState{Set({1}), 0}, 0),
                  IllegalMoveError);  // dominates nothing new
  CHECK_THROWS_AS(ApplyMove(p4, plain, GameState{}, 7), IllegalMoveError);

  const GameConfig one_pass = Config(Variant::kDGame, 1);
  GameState st = ApplyMove(p4, one_pass, GameState::Initial(one_pass), 0);
  CHECK(Mover(one_pass, st) == Player::kStaller);
  CHECK(CanPass(p4, one_pass, st));
  const GameState passed = ApplyPass(p4, one_pass, st);
  CHECK(passed.passes_left == 0);
  CHECK(passed.played == st.played);
  CHECK(Mover(one_pass, passed) == Player::kDominator);
  CHECK(TurnsTaken(one_pass, passed) == 2);
  CHECK_FALSE(CanPass(p4, one_pass, passed));
  CHECK_THROWS_AS(ApplyPass(p4, one_pass, passed), IllegalMoveError);
  // Dominator never passes.
  CHECK_THROWS_AS(ApplyPass(p4, one_pass, GameState::Initial(one_pass)),
                  IllegalMoveError);
  CHECK(ApplyAction(p4, one_pass, st, Action::Pass()) == passed);
}

TEST_CASE("status") {
  const Graph p5 = Path(5);
  const GameConfig wide = Config(Variant::kDGame, 0, Set({1, 2, 3}));
  CHECK(Status(p5, wide, GameState{Set({1}), 0}).kind ==
        GameStatus::Kind::kStuck);
  CHECK(Status(Complete(3), GameConfig{}, GameState{Set({0}), 0}) ==
        GameStatus{GameStatus::Kind::kWon, 1});
  CHECK(Status(Cycle(6), GameConfig{}, GameState{Set({0, 1}), 0}).kind ==
        GameStatus::Kind::kOngoing);
  // A spare pass does not rescue a stuck position.
  const GameConfig stuck_pass = Config(Variant::kDGame, 2, Set({2}));
  CHECK(Status(p5, stuck_pass, GameState{Set({0}), 2}).kind ==
        GameStatus::Kind::kStuck);
}

}  // namespace
}  // namespace cdgame
