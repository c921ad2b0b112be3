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

#ifndef CDGAME_VERIFY_SUITE_H_
#define CDGAME_VERIFY_SUITE_H_

// Named verification groups built from the analysis checks.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <filesystem>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "cdgame/analysis.h"

namespace cdgame {

struct SuiteOptions {
  // graph6 files; corpus-wide claims are added to the groups that take them.
  std::vector<std::filesystem::path> corpus;
  // Worker threads over independent instances. Results keep a fixed order.
  int workers = 1;
  // Per-solve budget for the stretch instances.
  std::chrono::milliseconds stretch_budget{60000};
};

// Group names in run order.
const std::vector<std::string>& SuiteGroups();

// Throws std::invalid_argument for an unknown group, Graph6Error or
// std::runtime_error for an unreadable corpus file.
std::vector<ClaimResult> RunGroup(const std::string& group,
                                  const SuiteOptions& options);

// Runs `only` (all groups when empty) in SuiteGroups() order. `sink`, when
// set, sees each group's claims as soon as the group finishes.
std::vector<ClaimResult> RunSuite(
    const std::vector<std::string>& only, const SuiteOptions& options,
    const std::function<void(const std::string&,
                             const std::vector<ClaimResult>&)>& sink = {});

// Maps fn over [0, n) on up to `workers` threads; output is in index order.
template <typename T>
std::vector<T> ParallelMap(int n, int workers,
                           const std::function<T(int)>& fn) {
  std::vector<T> out(n);
  if (workers <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(n);
  auto work = [&] {
    for (int i = next++; i < n; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < std::min(workers, n); ++w) pool.emplace_back(work);
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace cdgame

#endif  // CDGAME_VERIFY_SUITE_H_
