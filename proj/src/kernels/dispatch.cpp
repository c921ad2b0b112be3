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

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cdgame/kernels.h"
#include "kernels_internal.h"

namespace cdgame::kernels {

namespace {

constexpr KernelTable kScalarTable{Isa::kScalar, &MoveMaskScalar,
                                   &UnionRowsScalar};
#if defined(CDGAME_HAVE_AVX2)
constexpr KernelTable kAvx2Table{Isa::kAvx2, &MoveMaskAvx2, &UnionRowsAvx2};
#endif
#if defined(CDGAME_HAVE_NEON)
constexpr KernelTable kNeonTable{Isa::kNeon, &MoveMaskNeon, &UnionRowsNeon};
#endif

const KernelTable& SelectActive() {
  if (const char* pinned = std::getenv("CDGAME_ISA")) {
    const std::string_view name(pinned);
    for (Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon}) {
      if (name == IsaName(isa)) return TableFor(isa);
    }
    throw std::invalid_argument("CDGAME_ISA: unknown ISA '" +
                                std::string(name) + "'");
  }
  const std::vector<Isa> isas = SupportedIsas();
  return TableFor(isas.back());
}

}  // namespace

std::string_view IsaName(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
    case Isa::kNeon:
      return "neon";
  }
  return "unknown";
}

bool IsSupported(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(CDGAME_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::kNeon:
#if defined(CDGAME_HAVE_NEON)
      return true;  // mandatory on AArch64
#else
      return false;
#endif
  }
  return false;
}

std::vector<Isa> SupportedIsas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon}) {
    if (IsSupported(isa)) out.push_back(isa);
  }
  return out;
}

const KernelTable& TableFor(Isa isa) {
  if (!IsSupported(isa)) {
    throw std::invalid_argument("kernel ISA not supported here: " +
                                std::string(IsaName(isa)));
  }
  switch (isa) {
#if defined(CDGAME_HAVE_AVX2)
    case Isa::kAvx2:
      return kAvx2Table;
#endif
#if defined(CDGAME_HAVE_NEON)
    case Isa::kNeon:
      return kNeonTable;
#endif
    default:
      return kScalarTable;
  }
}

const KernelTable& Active() {
  static const KernelTable& table = SelectActive();
  return table;
}

}  // namespace cdgame::kernels
