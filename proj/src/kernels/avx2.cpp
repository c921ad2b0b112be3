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

// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <cstddef>
#include <cstdint>
#include <span>

#include "cdgame/kernels.h"
#include "kernels_internal.h"

namespace cdgame::kernels {

namespace {

// One bit per 64-bit lane, set where the lane is zero.
inline unsigned ZeroLanes(__m256i x) {
  const __m256i eq = _mm256_cmpeq_epi64(x, _mm256_setzero_si256());
  return static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(eq)));
}

}  // namespace

uint64_t MoveMaskAvx2(std::span<const uint64_t> closed,
                      std::span<const uint64_t> open, uint64_t dominated,
                      uint64_t played) {
  const size_t n = closed.size();
  const __m256i dom = _mm256_set1_epi64x(static_cast<long long>(dominated));
  const __m256i ply = _mm256_set1_epi64x(static_cast<long long>(played));
  uint64_t result = 0;
  size_t v = 0;
  for (; v + 4 <= n; v += 4) {
    const __m256i c = _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(closed.data() + v));
    unsigned lanes = ~ZeroLanes(_mm256_andnot_si256(dom, c)) & 0xF;
    if (played != 0) {
      const __m256i o = _mm256_loadu_si256(
          reinterpret_cast<const __m256i*>(open.data() + v));
      lanes &= ~ZeroLanes(_mm256_and_si256(o, ply)) & 0xF;
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

uint64_t UnionRowsAvx2(std::span<const uint64_t> rows, uint64_t selector) {
  const size_t n = rows.size();
  const __m256i lane_bits = _mm256_setr_epi64x(1, 2, 4, 8);
  __m256i acc = _mm256_setzero_si256();
  size_t v = 0;
  for (; v + 4 <= n; v += 4) {
    const uint64_t nibble = (selector >> v) & 0xF;
    if (nibble == 0) continue;
    const __m256i sel = _mm256_and_si256(
        _mm256_set1_epi64x(static_cast<long long>(nibble)), lane_bits);
    const __m256i keep = _mm256_cmpeq_epi64(sel, lane_bits);
    const __m256i r =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rows.data() + v));
    acc = _mm256_or_si256(acc, _mm256_and_si256(r, keep));
  }
  const __m128i folded = _mm_or_si128(_mm256_castsi256_si128(acc),
                                      _mm256_extracti128_si256(acc, 1));
  uint64_t out = static_cast<uint64_t>(_mm_cvtsi128_si64(folded)) |
                 static_cast<uint64_t>(_mm_extract_epi64(folded, 1));
  if (v < n) out |= UnionRowsScalar(rows.subspan(v), selector >> v);
  return out;
}

}  // namespace cdgame::kernels
