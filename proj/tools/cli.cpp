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

#include "cli.h"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cdgame/analysis.h"
#include "cdgame/families.h"
#include "cdgame/graph6.h"
#include "cdgame/solver.h"
#include "cdgame/verify_suite.h"
#include "json.hpp"

namespace cdgame::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GraphInput {
  std::string family;
  std::string g6;
  std::string g6_file;
  int line = 1;  // n-th graph in g6_file, 1-based
};

struct GameInput {
  std::string variant = "d";
  int passes = 0;
  std::vector<std::string> predominate;
};

void AddGraphOptions(CLI::App* cmd, GraphInput& in) {
  auto* family =
      cmd->add_option("--family", in.family, "family spec, e.g. path:7, gn:3");
  auto* g6 = cmd->add_option("--g6", in.g6, "graph6 string");
  auto* file =
      cmd->add_option("--g6-file", in.g6_file, "graph6 file")->check(
          CLI::ExistingFile);
  cmd->add_option("--index", in.line, "which graph of --g6-file (1-based)")
      ->check(CLI::PositiveNumber);
  family->excludes(g6, file);
  g6->excludes(file);
}

void AddGameOptions(CLI::App* cmd, GameInput& in) {
  cmd->add_option("--variant", in.variant, "d, s, dskip or sskip");
  cmd->add_option("--passes", in.passes, "Staller pass budget")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--predominate", in.predominate,
                  "predominated vertices (labels or indices)")
      ->delimiter(',');
}

Graph LoadGraph(const GraphInput& in) {
  if (!in.family.empty()) return BuildFamily(in.family);
  if (!in.g6.empty()) return ParseGraph6(in.g6);
  if (!in.g6_file.empty()) {
    const std::vector<CorpusEntry> entries = ReadGraph6File(in.g6_file);
    if (in.line > static_cast<int>(entries.size())) {
      throw UsageError(in.g6_file + " holds " +
                       std::to_string(entries.size()) + " graphs");
    }
    return entries[in.line - 1].graph;
  }
  throw UsageError("one of --family, --g6, --g6-file is required");
}

// Label first when the graph has labels, then a decimal index.
std::optional<int> ResolveVertex(const Graph& g, std::string_view token) {
  if (g.has_labels()) {
    if (auto v = g.FindLabel(token)) return v;
  }
  int v = -1;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    return std::nullopt;
  }
  if (v < 0 || v >= g.order()) return std::nullopt;
  return v;
}

GameConfig LoadConfig(const Graph& g, const GameInput& in) {
  GameConfig cfg;
  cfg.variant = ParseVariant(in.variant);
  cfg.pass_budget = in.passes;
  for (const std::string& token : in.predominate) {
    const auto v = ResolveVertex(g, token);
    if (!v) throw UsageError("unknown vertex '" + token + "'");
    cfg.predominated = cfg.predominated.with(*v);
  }
  cfg.Validate(g);
  return cfg;
}

int ThreadCount(int requested) {
  if (const char* env = std::getenv("CDGAME_THREADS")) {
    int n = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec == std::errc() && ptr == s.data() + s.size() && n >= 1) return n;
  }
  return std::max(1, requested);
}

std::string SetString(const Graph& g, VertexSet s) {
  std::string out = "{";
  for (int v : s) {
    if (out.size() > 1) out += ",";
    out += g.label(v);
  }
  return out + "}";
}

std::string ActionString(const Graph& g, Action a) {
  return a.is_pass() ? "pass" : g.label(a.vertex);
}

// --- solve -----------------------------------------------------------------

struct SolveArgs {
  GraphInput graph;
  GameInput game;
  int threads = 1;
  double budget_s = 60;
};

int CmdSolve(const SolveArgs& a, std::ostream& out) {
  const Graph g = LoadGraph(a.graph);
  const GameConfig cfg = LoadConfig(g, a.game);
  SolveOptions opt;
  opt.threads = ThreadCount(a.threads);
  opt.time_budget = std::chrono::milliseconds(
      static_cast<long long>(a.budget_s * 1000));
  const SolveReport r = Solve(g, cfg, opt);
  out << "value = " << r.value.ToString() << "\n";
  out << "line =";
  for (const PlyRecord& p : r.principal_line) {
    out << " " << (p.player == Player::kDominator ? "D:" : "S:")
        << ActionString(g, p.action);
  }
  out << "\n";
  out << "states_expanded = " << r.states_expanded << "\n";
  out << "memo_hits = " << r.memo_hits << "\n";
  out << "elapsed_ms = "
      << std::chrono::duration<double, std::milli>(r.elapsed).count() << "\n";
  return r.value.is_never() ? kExitNever : kExitOk;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> only;
  std::vector<std::string> corpus;
  std::string output;
  bool no_timing = false;
  int workers = 1;
  double budget_s = 60;
};

int CmdVerify(const VerifyArgs& a, std::ostream& out) {
  SuiteOptions options;
  for (const std::string& c : a.corpus) options.corpus.emplace_back(c);
  options.workers = ThreadCount(a.workers);
  options.stretch_budget =
      std::chrono::milliseconds(static_cast<long long>(a.budget_s * 1000));

  std::ofstream file;
  if (!a.output.empty()) {
    file.open(a.output);
    if (!file) throw UsageError("cannot write " + a.output);
  }
  int failures = 0;
  char row[128];
  std::snprintf(row, sizeof row, "%-16s %6s %6s %8s\n", "group", "pass",
                "fail", "budget");
  out << row;
  RunSuite(a.only, options,
           [&](const std::string& group, const std::vector<ClaimResult>& rs) {
             int counts[3] = {0, 0, 0};
             for (const ClaimResult& r : rs) {
               ++counts[static_cast<int>(r.verdict)];
               if (file.is_open()) {
                 file << r.ToJson(!a.no_timing).dump() << "\n";
               }
             }
             std::snprintf(row, sizeof row, "%-16s %6d %6d %8d\n",
                           group.c_str(), counts[0], counts[1], counts[2]);
             out << row;
             for (const ClaimResult& r : rs) {
               if (r.verdict != Verdict::kPass) {
                 out << "  " << VerdictName(r.verdict) << " " << r.claim
                     << " [" << r.instance << "] expected " << r.expected
                     << ", observed " << r.observed << "\n";
               }
             }
             out.flush();
             failures += counts[1] + counts[2];
           });
  out << (failures == 0 ? "all claims pass" : "claims not passing: " +
                                                  std::to_string(failures))
      << "\n";
  return failures == 0 ? kExitOk : kExitError;
}

// --- scan ------------------------------------------------------------------

struct ScanArgs {
  std::vector<std::string> corpus;
  std::string output;
  int workers = 1;
};

int CmdScan(const ScanArgs& a, std::ostream& out, std::ostream& err) {
  struct Item {
    std::string name;
    Graph graph;
  };
  std::vector<Item> items;
  for (const std::string& path : a.corpus) {
    for (CorpusEntry& e : ReadGraph6File(path)) {
      items.push_back({std::filesystem::path(path).filename().string() + ":" +
                           std::to_string(e.line_number) + ":" + e.text,
                       std::move(e.graph)});
    }
  }
  std::ofstream file;
  if (!a.output.empty()) {
    file.open(a.output);
    if (!file) throw UsageError("cannot write " + a.output);
  }
  std::ostream& sink = file.is_open() ? file : out;

  const int workers = ThreadCount(a.workers);
  std::optional<int> k_plus, k_minus;
  std::vector<std::string> candidates;
  int never_graphs = 0;
  // Chunks keep memory flat while output stays in input order.
  const int chunk = 256;
  for (size_t base = 0; base < items.size(); base += chunk) {
    const int n = static_cast<int>(std::min<size_t>(chunk, items.size() - base));
    const auto scans = ParallelMap<PredominationScan>(n, workers, [&](int i) {
      const Item& it = items[base + i];
      return ScanPredomination(it.graph, it.name);
    });
    for (const PredominationScan& s : scans) {
      sink << s.ToJson().dump() << "\n";
      if (s.k_plus) k_plus = std::max(k_plus.value_or(*s.k_plus), *s.k_plus);
      if (s.k_minus) {
        k_minus = std::max(k_minus.value_or(*s.k_minus), *s.k_minus);
      }
      if (s.candidate) candidates.push_back(s.name);
      if (!s.never_vertices.empty()) ++never_graphs;
    }
  }
  sink.flush();
  err << "scanned " << items.size() << " graphs\n";
  err << "max k+ = " << (k_plus ? std::to_string(*k_plus) : "n/a") << "\n";
  err << "max k- = " << (k_minus ? std::to_string(*k_minus) : "n/a") << "\n";
  err << "graphs with a never vertex = " << never_graphs << "\n";
  err << "all-different with some increase: " << candidates.size() << "\n";
  for (const std::string& c : candidates) err << "  " << c << "\n";
  return kExitOk;
}

// --- play ------------------------------------------------------------------

struct PlayArgs {
  GraphInput graph;
  GameInput game;
  std::string human = "staller";
};

int CmdPlay(const PlayArgs& a, std::istream& in, std::ostream& out) {
  const Graph g = LoadGraph(a.graph);
  const GameConfig cfg = LoadConfig(g, a.game);
  Player human;
  if (a.human == "dominator" || a.human == "d") {
    human = Player::kDominator;
  } else if (a.human == "staller" || a.human == "s") {
    human = Player::kStaller;
  } else {
    throw UsageError("--human must be dominator or staller");
  }
  Solver solver(g, cfg);
  GameState st = GameState::Initial(cfg);
  out << "graph: " << g.order() << " vertices, " << g.size() << " edges\n";
  out << "you play " << PlayerName(human) << "\n";
  for (;;) {
    const GameStatus status = Status(g, cfg, st);
    if (status.kind == GameStatus::Kind::kWon) {
      out << "game over after " << status.moves << " moves\n";
      return kExitOk;
    }
    if (status.kind == GameStatus::Kind::kStuck) {
      out << "game over: NEVER (undominated "
          << SetString(g, VertexSet::FirstN(g.order()) -
                              Dominated(g, cfg, st))
          << " cannot be reached)\n";
      return kExitNever;
    }
    out << "played " << SetString(g, st.played) << ", dominated "
        << SetString(g, Dominated(g, cfg, st));
    if (cfg.pass_budget > 0) out << ", passes left " << st.passes_left;
    out << "\n";
    const Player mover = Mover(cfg, st);
    if (mover != human) {
      const Action act = solver.OptimalMove(st);
      out << PlayerName(mover) << " plays " << ActionString(g, act) << "\n";
      st = ApplyAction(g, cfg, st, act);
      continue;
    }
    const VertexSet legal = LegalMoves(g, cfg, st);
    out << "legal " << SetString(g, legal)
        << (CanPass(g, cfg, st) ? " or pass" : "") << "\n";
    out << PlayerName(mover) << "> " << std::flush;
    std::string token;
    if (!(in >> token)) {
      out << "\ninput closed\n";
      return kExitError;
    }
    if (token == "pass") {
      if (!CanPass(g, cfg, st)) {
        out << "no pass available\n";
        continue;
      }
      st = ApplyPass(g, cfg, st);
      continue;
    }
    const auto v = ResolveVertex(g, token);
    if (!v) {
      out << "no vertex '" << token << "'\n";
      continue;
    }
    if (!legal.contains(*v)) {
      out << "illegal move " << g.label(*v) << "\n";
      continue;
    }
    st = ApplyMove(g, cfg, st, *v);
  }
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solver for the connected domination game"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "value and optimal line of one game");
  AddGraphOptions(solve, solve_args.graph);
  AddGameOptions(solve, solve_args.game);
  solve->add_option("--threads", solve_args.threads)
      ->check(CLI::PositiveNumber);
  solve->add_option("--budget", solve_args.budget_s, "seconds")
      ->check(CLI::PositiveNumber);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--only", verify_args.only, "groups to run")
      ->delimiter(',');
  verify->add_option("--corpus", verify_args.corpus, "graph6 corpus files");
  verify->add_option("--output", verify_args.output, "JSON-lines output");
  verify->add_flag("--no-timing", verify_args.no_timing,
                   "omit elapsed_ms from JSON lines");
  verify->add_option("--workers", verify_args.workers)
      ->check(CLI::PositiveNumber);
  verify->add_option("--budget", verify_args.budget_s,
                     "seconds per stretch instance")
      ->check(CLI::PositiveNumber);
  verify->add_flag_callback("--list", [&] {
    for (const std::string& g : SuiteGroups()) out << g << "\n";
    throw CLI::Success();
  });

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "predomination scan of a corpus");
  scan->add_option("corpus", scan_args.corpus, "graph6 files")->required();
  scan->add_option("--output", scan_args.output, "JSON-lines output");
  scan->add_option("--workers", scan_args.workers)
      ->check(CLI::PositiveNumber);

  PlayArgs play_args;
  auto* play = app.add_subcommand("play", "play against the solver");
  AddGraphOptions(play, play_args.graph);
  AddGameOptions(play, play_args.game);
  play->add_option("--human", play_args.human, "dominator or staller");

  std::vector<const char*> argv;
  for (const std::string& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }

  try {
    if (*solve) return CmdSolve(solve_args, out);
    if (*verify) return CmdVerify(verify_args, out);
    if (*scan) return CmdScan(scan_args, out, err);
    if (*play) return CmdPlay(play_args, in, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace cdgame::cli
