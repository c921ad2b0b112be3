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

#ifndef CDGAME_SOLVER_H_
#define CDGAME_SOLVER_H_

#include <atomic>
#include <chrono>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cdgame/game.h"
#include "cdgame/graph.h"

namespace cdgame {

// Outcome of optimal play: a move count, or Never when the game cannot be
// finished. Never compares above every finite value, so Dominator's min and
// Staller's max need no special cases.
class GameValue {
 public:
  static constexpr GameValue Finite(int moves) { return GameValue(moves); }
  static constexpr GameValue Never() { return GameValue(kNever); }

  constexpr bool is_never() const { return moves_ == kNever; }
  constexpr bool is_finite() const { return moves_ != kNever; }
  // Throws std::logic_error on Never.
  int moves() const;
  // "7" or "NEVER".
  std::string ToString() const;

  constexpr auto operator<=>(const GameValue&) const = default;

 private:
  static constexpr int kNever = 1 << 20;
  constexpr explicit GameValue(int m) : moves_(m) {}
  int moves_;
};

struct PlyRecord {
  Player player;
  Action action;
};

struct SolveOptions {
  // Root branches are split across this many threads; 1 is the reference.
  int threads = 1;
  std::optional<std::chrono::milliseconds> time_budget;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveReport {
  GameValue value = GameValue::Never();
  // From the initial position until the game is won or stuck.
  std::vector<PlyRecord> principal_line;
  uint64_t states_expanded = 0;
  uint64_t memo_hits = 0;
  std::chrono::nanoseconds elapsed{0};
};

// Exact minimax over a single (graph, config) pair. Dominator minimizes,
// Staller maximizes; positions are memoized on (played, passes_left), which
// determines the dominated set and the mover. The table persists across
// calls, so repeated queries on one game are cheap.
class Solver {
 public:
  // Throws ConfigError.
  Solver(Graph g, GameConfig cfg, SolveOptions options = {});
  ~Solver();
  Solver(const Solver&) = delete;
  Solver& operator=(const Solver&) = delete;

  const Graph& graph() const { return graph_; }
  const GameConfig& config() const { return cfg_; }

  GameValue Value(const GameState& st);
  // Lowest-index vertex achieving the position's value; a pass only when no
  // vertex does. Throws std::logic_error unless the game is ongoing.
  Action OptimalMove(const GameState& st);
  std::vector<PlyRecord> PrincipalLine(const GameState& from);
  // Value and principal line of the initial position.
  SolveReport Solve();

  uint64_t states_expanded() const;
  uint64_t memo_hits() const;

 private:
  class Memo;

  GameValue Evaluate(uint64_t played, int passes_left, uint64_t dominated);
  GameValue EvaluateRoot(uint64_t played, int passes_left, uint64_t dominated);
  void Tick();

  Graph graph_;
  GameConfig cfg_;
  SolveOptions options_;
  uint64_t all_;
  std::unique_ptr<Memo> memo_;
  std::atomic<uint64_t> expanded_{0};
  std::atomic<uint64_t> hits_{0};
  std::atomic<bool> cancelled_{false};
  std::chrono::steady_clock::time_point deadline_;
};

SolveReport Solve(const Graph& g, const GameConfig& cfg,
                  const SolveOptions& options = {});

// Plain recursive minimax with no memo, sharing no move-generation code with
// Solver. Exponential; meant for graphs up to about 10 vertices.
GameValue SolveNaive(const Graph& g, const GameConfig& cfg,
                     uint64_t* states_expanded = nullptr);

Action OptimalMove(const Graph& g, const GameConfig& cfg,
                   const GameState& st);

// Value of the game on G with the vertices of `s` predominated.
GameValue ValueWithPredominated(const Graph& g, Variant variant, VertexSet s,
                                const SolveOptions& options = {});

}  // namespace cdgame

#endif  // CDGAME_SOLVER_H_
