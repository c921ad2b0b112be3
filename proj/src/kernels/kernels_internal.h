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

#ifndef CDGAME_SRC_KERNELS_KERNELS_INTERNAL_H_
#define CDGAME_SRC_KERNELS_KERNELS_INTERNAL_H_

#include <cstdint>
#include <span>

namespace cdgame::kernels {

#if defined(CDGAME_HAVE_AVX2)
uint64_t MoveMaskAvx2(std::span<const uint64_t> closed,
                      std::span<const uint64_t> open, uint64_t dominated,
                      uint64_t played);
uint64_t UnionRowsAvx2(std::span<const uint64_t> rows, uint64_t selector);
#endif

#if defined(CDGAME_HAVE_NEON)
uint64_t MoveMaskNeon(std::span<const uint64_t> closed,
                      std::span<const uint64_t> open, uint64_t dominated,
                      uint64_t played);
uint64_t UnionRowsNeon(std::span<const uint64_t> rows, uint64_t selector);
#endif

}  // namespace cdgame::kernels

#endif  // CDGAME_SRC_KERNELS_KERNELS_INTERNAL_H_
