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

#include <arm_neon.h>

#include <cstddef>
#include <cstdint>
#include <span>

#include "cdgame/kernels.h"
#include "kernels_internal.h"

namespace cdgame::kernels {

namespace {

// Bit i set iff lane i of x is nonzero.
inline unsigned NonZeroLanes(uint64x2_t x) {
  const uint64x2_t zero = vceqzq_u64(x);
  return (vgetq_lane_u64(zero, 0) ? 0u : 1u) |
         (vgetq_lane_u64(zero, 1) ? 0u : 2u);
}

}  // namespace

uint64_t MoveMaskNeon(std::span<const uint64_t> closed,
                      std::span<const uint64_t> open, uint64_t dominated,
                      uint64_t played) {
  const size_t n = closed.size();
  const uint64x2_t dom = vdupq_n_u64(dominated);
  const uint64x2_t ply = vdupq_n_u64(played);
  uint64_t result = 0;
  size_t v = 0;
  for (; v + 2 <= n; v += 2) {
    unsigned lanes = NonZeroLanes(vbicq_u64(vld1q_u64(closed.data() + v), dom));
    if (played != 0) {
      lanes &= NonZeroLanes(vandq_u64(vld1q_u64(open.data() + v), ply));
    }
    result |= static_cast<uint64_t>(lanes) << v;
  }
  if (v < n) {
    result |= MoveMaskScalar(closed.subspan(v), open.subspan(v), dominated,
                             played)
              << v;
  }
  return result;
}

uint64_t UnionRowsNeon(std::span<const uint64_t> rows, uint64_t selector) {
  const size_t n = rows.size();
  const uint64_t lane_bits_init[2] = {1, 2};
  const uint64x2_t lane_bits = vld1q_u64(lane_bits_init);
  uint64x2_t acc = vdupq_n_u64(0);
  size_t v = 0;
  for (; v + 2 <= n; v += 2) {
    const uint64_t pair = (selector >> v) & 0x3;
    if (pair == 0) continue;
    const uint64x2_t keep =
        vceqq_u64(vandq_u64(vdupq_n_u64(pair), lane_bits), lane_bits);
    acc = vorrq_u64(acc, vandq_u64(vld1q_u64(rows.data() + v), keep));
  }
  uint64_t out = vgetq_lane_u64(acc, 0) | vgetq_lane_u64(acc, 1);
  if (v < n) out |= UnionRowsScalar(rows.subspan(v), selector >> v);
  return out;
}

}  // namespace cdgame::kernels
