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

#include <cstddef>
#include <cstdint>
#include <span>

#include "cdgame/kernels.h"

namespace cdgame::kernels {

uint64_t MoveMaskScalar(std::span<const uint64_t> closed,
                        std::span<const uint64_t> open, uint64_t dominated,
                        uint64_t played) {
  uint64_t result = 0;
  const size_t n = closed.size();
  for (size_t v = 0; v < n; ++v) {
    const bool dominates_new = (closed[v] & ~dominated) != 0;
    const bool touches_played = played == 0 || (open[v] & played) != 0;
    if (dominates_new && touches_played) result |= uint64_t{1} << v;
  }
  return result;
}

uint64_t UnionRowsScalar(std::span<const uint64_t> rows, uint64_t selector) {
  uint64_t acc = 0;
  const size_t n = rows.size();
  for (size_t v = 0; v < n; ++v) {
    if ((selector >> v) & 1) acc |= rows[v];
  }
  return acc;
}

}  // namespace cdgame::kernels
