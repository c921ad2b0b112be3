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

#include "cdgame/game.h"

#include <string>

#include "cdgame/kernels.h"

namespace cdgame {

std::string_view VariantName(Variant v) {
  switch (v) {
    case Variant::kDGame:
      return "d";
    case Variant::kSGame:
      return "s";
    case Variant::kStallerFirstSkip:
      return "dskip";
    case Variant::kDominatorFirstSkip:
      return "sskip";
  }
  return "?";
}

Variant ParseVariant(std::string_view text) {
  if (text == "d" || text == "D" || text == "d-game") return Variant::kDGame;
  if (text == "s" || text == "S" || text == "s-game") return Variant::kSGame;
  if (text == "dskip" || text == "staller-first-skip") {
    return Variant::kStallerFirstSkip;
  }
  if (text == "sskip" || text == "dominator-first-skip") {
    return Variant::kDominatorFirstSkip;
  }
  throw ConfigError("unknown variant '" + std::string(text) +
                    "' (expected d, s, dskip or sskip)");
}

std::string_view PlayerName(Player p) {
  return p == Player::kDominator ? "Dominator" : "Staller";
}

Player MoverAt(Variant variant, int t) {
  if (t < 1) throw std::invalid_argument("turn index must be >= 1");
  const bool odd = (t % 2) == 1;
  switch (variant) {
    case Variant::kDGame:
      return odd ? Player::kDominator : Player::kStaller;
    case Variant::kSGame:
      return odd ? Player::kStaller : Player::kDominator;
    case Variant::kStallerFirstSkip:
      if (t <= 2) return Player::kDominator;
      return odd ? Player::kStaller : Player::kDominator;
    case Variant::kDominatorFirstSkip:
      if (t <= 2) return Player::kStaller;
      return odd ? Player::kDominator : Player::kStaller;
  }
  return Player::kDominator;
}

void GameConfig::Validate(const Graph& g) const {
  if (pass_budget < 0) throw ConfigError("pass budget must be nonnegative");
  if (pass_budget > 0 && variant != Variant::kDGame &&
      variant != Variant::kSGame) {
    throw ConfigError("Staller passes are only defined for the D- and S-game");
  }
  if (!predominated.subset_of(g.vertices())) {
    throw ConfigError("predominated set " + predominated.ToString() +
                      " exceeds graph order " + std::to_string(g.order()));
  }
}

int TurnsTaken(const GameConfig& cfg, const GameState& st) {
  return st.played.size() + (cfg.pass_budget - st.passes_left);
}

Player Mover(const GameConfig& cfg, const GameState& st) {
  return MoverAt(cfg.variant, TurnsTaken(cfg, st) + 1);
}

VertexSet Dominated(const Graph& g, const GameConfig& cfg,
                    const GameState& st) {
  return ClosedNeighborhood(g, st.played) | cfg.predominated;
}

VertexSet LegalMoves(const Graph& g, const GameConfig& cfg,
                     const GameState& st) {
  const VertexSet dom = Dominated(g, cfg, st);
  return VertexSet(kernels::Active().move_mask(
      g.closed_rows(), g.open_rows(), dom.bits(), st.played.bits()));
}

GameStatus Status(const Graph& g, const GameConfig& cfg, const GameState& st) {
  if (Dominated(g, cfg, st) == g.vertices()) {
    return {GameStatus::Kind::kWon, st.played.size()};
  }
  if (LegalMoves(g, cfg, st).empty()) return {GameStatus::Kind::kStuck, 0};
  return {GameStatus::Kind::kOngoing, 0};
}

bool CanPass(const Graph& g, const GameConfig& cfg, const GameState& st) {
  return st.passes_left > 0 && Mover(cfg, st) == Player::kStaller &&
         Status(g, cfg, st).kind == GameStatus::Kind::kOngoing;
}

GameState ApplyMove(const Graph& g, const GameConfig& cfg, const GameState& st,
                    int v) {
  if (v < 0 || v >= g.order()) {
    throw IllegalMoveError("vertex " + std::to_string(v) + " out of range");
  }
  if (!LegalMoves(g, cfg, st).contains(v)) {
    throw IllegalMoveError("vertex " + g.label(v) + " is not a legal move");
  }
  return {st.played.with(v), st.passes_left};
}

GameState ApplyPass(const Graph& g, const GameConfig& cfg,
                    const GameState& st) {
  if (Mover(cfg, st) != Player::kStaller) {
    throw IllegalMoveError("only Staller may pass");
  }
  if (st.passes_left <= 0) throw IllegalMoveError("no passes left");
  if (Status(g, cfg, st).kind != GameStatus::Kind::kOngoing) {
    throw IllegalMoveError("the game is over");
  }
  return {st.played, st.passes_left - 1};
}

GameState ApplyAction(const Graph& g, const GameConfig& cfg,
                      const GameState& st, Action a) {
  return a.is_pass() ? ApplyPass(g, cfg, st) : ApplyMove(g, cfg, st, a.vertex);
}

}  // namespace cdgame
