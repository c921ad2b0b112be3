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

#ifndef CDGAME_KERNELS_H_
#define CDGAME_KERNELS_H_

// Bit-row kernels behind move generation and neighborhood unions.
//
// Every kernel has a scalar reference implementation; vector variants
// (AVX2 on x86-64, NEON on AArch64) must return bit-identical results and are
// selected once at runtime from the CPU's capabilities.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace cdgame::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view IsaName(Isa isa);

// Vertices v (indices into the row spans) with
//   closed[v] & ~dominated != 0, and
//   played == 0 or open[v] & played != 0.
using MoveMaskFn = uint64_t (*)(std::span<const uint64_t> closed,
                                std::span<const uint64_t> open,
                                uint64_t dominated, uint64_t played);

// OR of rows[v] over the set bits v of `selector`.
using UnionRowsFn = uint64_t (*)(std::span<const uint64_t> rows,
                                 uint64_t selector);

struct KernelTable {
  Isa isa;
  MoveMaskFn move_mask;
  UnionRowsFn union_rows;
};

uint64_t MoveMaskScalar(std::span<const uint64_t> closed,
                        std::span<const uint64_t> open, uint64_t dominated,
                        uint64_t played);
uint64_t UnionRowsScalar(std::span<const uint64_t> rows, uint64_t selector);

// Whether the running CPU (and this build) can execute `isa`.
bool IsSupported(Isa isa);
std::vector<Isa> SupportedIsas();

// Table for a specific ISA; throws std::invalid_argument if unsupported.
const KernelTable& TableFor(Isa isa);

// The widest supported table. The choice can be pinned with the environment
// variable CDGAME_ISA=scalar|avx2|neon (read once).
const KernelTable& Active();

}  // namespace cdgame::kernels

#endif  // CDGAME_KERNELS_H_
