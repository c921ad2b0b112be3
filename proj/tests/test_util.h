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

#ifndef CDGAME_TESTS_TEST_UTIL_H_
#define CDGAME_TESTS_TEST_UTIL_H_

// Brute-force helpers that share no code with the library's algorithms.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "cdgame/graph.h"

namespace cdgame::testing {

inline std::string DataPath(const std::string& name) {
  return std::string(CDGAME_TEST_DATA_DIR) + "/" + name;
}

// Adjacency matrix from Graph::adjacent only.
inline std::vector<std::vector<bool>> Matrix(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) m[u][v] = u != v && g.adjacent(u, v);
  }
  return m;
}

inline bool DominatesAll(const std::vector<std::vector<bool>>& m,
                         uint64_t s) {
  const int n = static_cast<int>(m.size());
  for (int v = 0; v < n; ++v) {
    bool hit = (s >> v) & 1;
    for (int u = 0; u < n && !hit; ++u) hit = ((s >> u) & 1) && m[u][v];
    if (!hit) return false;
  }
  return true;
}

inline bool ConnectedSubset(const std::vector<std::vector<bool>>& m,
                            uint64_t s) {
  if (s == 0) return false;
  uint64_t seen = s & -s;
  for (bool grew = true; grew;) {
    grew = false;
    for (int u = 0; u < static_cast<int>(m.size()); ++u) {
      if (!((seen >> u) & 1)) continue;
      for (int v = 0; v < static_cast<int>(m.size()); ++v) {
        if (((s >> v) & 1) && !((seen >> v) & 1) && m[u][v]) {
          seen |= uint64_t{1} << v;
          grew = true;
        }
      }
    }
  }
  return seen == s;
}

// Smallest |S| over all subsets; exponential, n <= ~16.
inline int BruteDomination(const Graph& g, bool connected) {
  const auto m = Matrix(g);
  const int n = g.order();
  int best = n;
  for (uint64_t s = 1; s < (uint64_t{1} << n); ++s) {
    const int size = std::popcount(s);
    if (size >= best) continue;
    if (!DominatesAll(m, s)) continue;
    if (connected && !ConnectedSubset(m, s)) continue;
    best = size;
  }
  return best;
}

// Join test over all vertex bipartitions (A, B) with every A-B pair
// adjacent. mode 2: both sides non-complete; mode 1: at least one.
inline bool BruteJoin(const Graph& g, int mode) {
  const auto m = Matrix(g);
  const int n = g.order();
  auto complete = [&](uint64_t s) {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (((s >> u) & 1) && ((s >> v) & 1) && !m[u][v]) return false;
      }
    }
    return true;
  };
  const uint64_t all = (uint64_t{1} << n) - 1;
  for (uint64_t a = 1; a < all; ++a) {
    const uint64_t b = all & ~a;
    bool full = true;
    for (int u = 0; u < n && full; ++u) {
      for (int v = 0; v < n && full; ++v) {
        if (((a >> u) & 1) && ((b >> v) & 1) && !m[u][v]) full = false;
      }
    }
    if (!full) continue;
    const int noncomplete = !complete(a) + !complete(b);
    if (noncomplete >= mode) return true;
  }
  return false;
}

}  // namespace cdgame::testing

#endif  // CDGAME_TESTS_TEST_UTIL_H_
