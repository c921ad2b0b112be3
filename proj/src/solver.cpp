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

#include "cdgame/solver.h"

#include <algorithm>
#include <bit>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cdgame/kernels.h"

namespace cdgame {

int GameValue::moves() const {
  if (is_never()) throw std::logic_error("GameValue::moves() on Never");
  return moves_;
}

std::string GameValue::ToString() const {
  return is_never() ? "NEVER" : std::to_string(moves_);
}

// Sharded map with insert-if-absent; locks are only taken when more than one
// thread searches.
class Solver::Memo {
 public:
  explicit Memo(bool concurrent) : concurrent_(concurrent) {}

  std::optional<GameValue> Find(uint64_t played, int passes) {
    Shard& s = ShardFor(played, passes);
    std::unique_lock lock(s.mu, std::defer_lock);
    if (concurrent_) lock.lock();
    const auto it = s.map.find(Key{played, passes});
    if (it == s.map.end()) return std::nullopt;
    return it->second;
  }

  void Insert(uint64_t played, int passes, GameValue value) {
    Shard& s = ShardFor(played, passes);
    std::unique_lock lock(s.mu, std::defer_lock);
    if (concurrent_) lock.lock();
    s.map.try_emplace(Key{played, passes}, value);
  }

 private:
  struct Key {
    uint64_t played;
    int passes;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    size_t operator()(const Key& k) const {
      uint64_t x = k.played ^ (static_cast<uint64_t>(k.passes) * 0x9e3779b97f4a7c15ULL);
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
      return static_cast<size_t>(x ^ (x >> 31));
    }
  };
  struct Shard {
    std::mutex mu;
    std::unordered_map<Key, GameValue, KeyHash> map;
  };
  static constexpr int kShards = 64;

  Shard& ShardFor(uint64_t played, int passes) {
    return shards_[KeyHash{}(Key{played, passes}) % kShards];
  }

  bool concurrent_;
  Shard shards_[kShards];
};

Solver::Solver(Graph g, GameConfig cfg, SolveOptions options)
    : graph_(std::move(g)),
      cfg_(cfg),
      options_(options),
      all_(graph_.vertices().bits()) {
  cfg_.Validate(graph_);
  if (options_.threads < 1) options_.threads = 1;
  memo_ = std::make_unique<Memo>(options_.threads > 1);
}

Solver::~Solver() = default;

uint64_t Solver::states_expanded() const { return expanded_.load(); }
uint64_t Solver::memo_hits() const { return hits_.load(); }

void Solver::Tick() {
  const uint64_t n = expanded_.fetch_add(1, std::memory_order_relaxed) + 1;
  if (cancelled_.load(std::memory_order_relaxed)) {
    throw BudgetExceeded("search cancelled");
  }
  if (options_.time_budget && (n & 1023) == 0 &&
      std::chrono::steady_clock::now() > deadline_) {
    cancelled_ = true;
    throw BudgetExceeded("time budget of " +
                         std::to_string(options_.time_budget->count()) +
                         " ms exceeded");
  }
}

GameValue Solver::Evaluate(uint64_t played, int passes_left,
                           uint64_t dominated) {
  if (dominated == all_) return GameValue::Finite(std::popcount(played));
  if (auto hit = memo_->Find(played, passes_left)) {
    hits_.fetch_add(1, std::memory_order_relaxed);
    return *hit;
  }
  Tick();
  const auto rows = graph_.closed_rows();
  const uint64_t legal = kernels::Active().move_mask(
      rows, graph_.open_rows(), dominated, played);
  GameValue best = GameValue::Never();
  if (legal != 0) {
    const int turn =
        std::popcount(played) + (cfg_.pass_budget - passes_left) + 1;
    if (MoverAt(cfg_.variant, turn) == Player::kDominator) {
      for (int v : VertexSet(legal)) {
        best = std::min(best, Evaluate(played | (uint64_t{1} << v),
                                       passes_left, dominated | rows[v]));
      }
    } else {
      best = GameValue::Finite(0);
      for (int v : VertexSet(legal)) {
        best = std::max(best, Evaluate(played | (uint64_t{1} << v),
                                       passes_left, dominated | rows[v]));
      }
      if (passes_left > 0) {
        best = std::max(best, Evaluate(played, passes_left - 1, dominated));
      }
    }
  }
  memo_->Insert(played, passes_left, best);
  return best;
}

// Same recursion as Evaluate, with the root's children fanned out to worker
// threads. Values do not depend on the schedule.
GameValue Solver::EvaluateRoot(uint64_t played, int passes_left,
                               uint64_t dominated) {
  if (options_.threads <= 1 || dominated == all_ ||
      memo_->Find(played, passes_left)) {
    return Evaluate(played, passes_left, dominated);
  }
  const auto rows = graph_.closed_rows();
  const uint64_t legal =
      kernels::Active().move_mask(rows, graph_.open_rows(), dominated, played);
  struct Child {
    uint64_t played;
    int passes;
    uint64_t dominated;
  };
  std::vector<Child> children;
  for (int v : VertexSet(legal)) {
    children.push_back(
        {played | (uint64_t{1} << v), passes_left, dominated | rows[v]});
  }
  const int turn = std::popcount(played) + (cfg_.pass_budget - passes_left) + 1;
  if (legal != 0 && passes_left > 0 &&
      MoverAt(cfg_.variant, turn) == Player::kStaller) {
    children.push_back({played, passes_left - 1, dominated});
  }
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    try {
      for (size_t i = next++; i < children.size(); i = next++) {
        Evaluate(children[i].played, children[i].passes,
                 children[i].dominated);
      }
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
      cancelled_ = true;
    }
  };
  std::vector<std::thread> pool;
  const int n_threads =
      std::min<int>(options_.threads, static_cast<int>(children.size()));
  for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  // Children are now memoized; the sequential pass combines them.
  return Evaluate(played, passes_left, dominated);
}

GameValue Solver::Value(const GameState& st) {
  if (!st.played.subset_of(graph_.vertices())) {
    throw std::out_of_range("played set exceeds graph order");
  }
  deadline_ = std::chrono::steady_clock::now() +
              options_.time_budget.value_or(std::chrono::milliseconds(0));
  cancelled_ = false;
  return EvaluateRoot(st.played.bits(), st.passes_left,
                      Dominated(graph_, cfg_, st).bits());
}

Action Solver::OptimalMove(const GameState& st) {
  if (Status(graph_, cfg_, st).kind != GameStatus::Kind::kOngoing) {
    throw std::logic_error("no legal action: the game is over");
  }
  const GameValue target = Value(st);
  for (int v : LegalMoves(graph_, cfg_, st)) {
    if (Value(ApplyMove(graph_, cfg_, st, v)) == target) {
      return Action::Vertex(v);
    }
  }
  if (CanPass(graph_, cfg_, st) &&
      Value(ApplyPass(graph_, cfg_, st)) == target) {
    return Action::Pass();
  }
  throw std::logic_error("no action attains the position value");
}

std::vector<PlyRecord> Solver::PrincipalLine(const GameState& from) {
  std::vector<PlyRecord> line;
  GameState st = from;
  while (Status(graph_, cfg_, st).kind == GameStatus::Kind::kOngoing) {
    const Action a = OptimalMove(st);
    line.push_back({Mover(cfg_, st), a});
    st = ApplyAction(graph_, cfg_, st, a);
  }
  return line;
}

SolveReport Solver::Solve() {
  const auto start = std::chrono::steady_clock::now();
  SolveReport report;
  const GameState initial = GameState::Initial(cfg_);
  report.value = Value(initial);
  report.principal_line = PrincipalLine(initial);
  report.states_expanded = states_expanded();
  report.memo_hits = memo_hits();
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

SolveReport Solve(const Graph& g, const GameConfig& cfg,
                  const SolveOptions& options) {
  Solver solver(g, cfg, options);
  return solver.Solve();
}

Action OptimalMove(const Graph& g, const GameConfig& cfg,
                   const GameState& st) {
  Solver solver(g, cfg);
  return solver.OptimalMove(st);
}

GameValue ValueWithPredominated(const Graph& g, Variant variant, VertexSet s,
                                const SolveOptions& options) {
  GameConfig cfg;
  cfg.variant = variant;
  cfg.predominated = s;
  Solver solver(g, cfg, options);
  return solver.Value(GameState::Initial(cfg));
}

namespace {

// The oracle below re-derives every rule from the adjacency predicate alone.
class NaiveSearch {
 public:
  NaiveSearch(const Graph& g, const GameConfig& cfg) : g_(g), cfg_(cfg) {}

  GameValue Run() {
    std::vector<bool> played(g_.order(), false);
    return Visit(played, 0, 0, cfg_.pass_budget);
  }

  uint64_t visited() const { return visited_; }

 private:
  bool StallerToMove(int turn) const {
    // turn is 1-based.
    switch (cfg_.variant) {
      case Variant::kDGame:
        return turn % 2 == 0;
      case Variant::kSGame:
        return turn % 2 == 1;
      case Variant::kStallerFirstSkip:
        return turn >= 3 && turn % 2 == 1;
      case Variant::kDominatorFirstSkip:
        return turn <= 2 || turn % 2 == 0;
    }
    return false;
  }

  GameValue Visit(std::vector<bool>& played, int moves, int turns,
                  int passes_left) {
    ++visited_;
    const int n = g_.order();
    std::vector<bool> dominated(n, false);
    for (int v = 0; v < n; ++v) {
      if (cfg_.predominated.contains(v)) dominated[v] = true;
      if (!played[v]) continue;
      dominated[v] = true;
      for (int w = 0; w < n; ++w) {
        if (g_.adjacent(v, w)) dominated[w] = true;
      }
    }
    if (std::all_of(dominated.begin(), dominated.end(),
                    [](bool d) { return d; })) {
      return GameValue::Finite(moves);
    }
    std::vector<int> legal;
    for (int v = 0; v < n; ++v) {
      if (played[v]) continue;
      bool attached = moves == 0;
      for (int u = 0; u < n && !attached; ++u) {
        attached = played[u] && g_.adjacent(u, v);
      }
      if (!attached) continue;
      bool fresh = !dominated[v];
      for (int w = 0; w < n && !fresh; ++w) {
        fresh = g_.adjacent(v, w) && !dominated[w];
      }
      if (fresh) legal.push_back(v);
    }
    if (legal.empty()) return GameValue::Never();

    const bool staller = StallerToMove(turns + 1);
    std::vector<GameValue> outcomes;
    for (int v : legal) {
      played[v] = true;
      outcomes.push_back(Visit(played, moves + 1, turns + 1, passes_left));
      played[v] = false;
    }
    if (staller && passes_left > 0) {
      outcomes.push_back(Visit(played, moves, turns + 1, passes_left - 1));
    }
    return staller ? *std::max_element(outcomes.begin(), outcomes.end())
                   : *std::min_element(outcomes.begin(), outcomes.end());
  }

  const Graph& g_;
  const GameConfig& cfg_;
  uint64_t visited_ = 0;
};

}  // namespace

GameValue SolveNaive(const Graph& g, const GameConfig& cfg,
                     uint64_t* states_expanded) {
  cfg.Validate(g);
  NaiveSearch search(g, cfg);
  const GameValue value = search.Run();
  if (states_expanded != nullptr) *states_expanded = search.visited();
  return value;
}

}  // namespace cdgame
