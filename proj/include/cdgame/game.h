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

#ifndef CDGAME_GAME_H_
#define CDGAME_GAME_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "cdgame/graph.h"
#include "cdgame/vertex_set.h"

namespace cdgame {

// Who moves when.
//   kDGame              D S D S ...
//   kSGame              S D S D ...
//   kStallerFirstSkip   D D S D S ...  (Staller skips her first turn)
//   kDominatorFirstSkip S S D S D ...  (Dominator skips his first turn)
enum class Variant { kDGame, kSGame, kStallerFirstSkip, kDominatorFirstSkip };

enum class Player { kDominator, kStaller };

std::string_view VariantName(Variant v);
// Accepts "d", "s", "dskip"/"staller-first-skip", "sskip"/"dominator-first-skip".
Variant ParseVariant(std::string_view text);
std::string_view PlayerName(Player p);

// Mover of the t-th turn, t >= 1. Turns count vertex moves and passes.
Player MoverAt(Variant variant, int t);

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IllegalMoveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GameConfig {
  Variant variant = Variant::kDGame;
  // Number of times Staller may pass. Only valid for kDGame and kSGame.
  int pass_budget = 0;
  // Vertices that count as dominated before the first move.
  VertexSet predominated;

  // Throws ConfigError.
  void Validate(const Graph& g) const;
};

// Position of a game. The dominated set and the mover are derived.
struct GameState {
  VertexSet played;
  int passes_left = 0;

  static GameState Initial(const GameConfig& cfg) {
    return {VertexSet(), cfg.pass_budget};
  }
  bool operator==(const GameState&) const = default;
};

// A vertex move or a Staller pass.
struct Action {
  static constexpr int kPass = -1;
  int vertex = kPass;

  static Action Pass() { return {kPass}; }
  static Action Vertex(int v) { return {v}; }
  bool is_pass() const { return vertex == kPass; }
  bool operator==(const Action&) const = default;
};

struct GameStatus {
  enum class Kind { kOngoing, kWon, kStuck };
  Kind kind = Kind::kOngoing;
  int moves = 0;  // |played| when kWon

  bool operator==(const GameStatus&) const = default;
};

// Turns taken so far, passes included.
int TurnsTaken(const GameConfig& cfg, const GameState& st);
Player Mover(const GameConfig& cfg, const GameState& st);
VertexSet Dominated(const Graph& g, const GameConfig& cfg,
                    const GameState& st);

// Vertices the mover may select: each must dominate a vertex not yet
// dominated and, unless nothing has been played, be adjacent to a played
// vertex. Predominated vertices stay selectable.
VertexSet LegalMoves(const Graph& g, const GameConfig& cfg,
                     const GameState& st);
bool CanPass(const Graph& g, const GameConfig& cfg, const GameState& st);

// Throw IllegalMoveError.
GameState ApplyMove(const Graph& g, const GameConfig& cfg, const GameState& st,
                    int v);
GameState ApplyPass(const Graph& g, const GameConfig& cfg,
                    const GameState& st);
GameState ApplyAction(const Graph& g, const GameConfig& cfg,
                      const GameState& st, Action a);

// Won once everything is dominated; Stuck when vertices remain undominated
// but no vertex can be selected (a pass does not change that).
GameStatus Status(const Graph& g, const GameConfig& cfg, const GameState& st);

}  // namespace cdgame

#endif  // CDGAME_GAME_H_
