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
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "cdgame/kernels.h"
#include "doctest.h"

namespace cdgame::kernels {
namespace {

// Straight-line restatement of the move-mask definition.
uint64_t MoveMaskLoop(const std::vector<uint64_t>& closed,
                      const std::vector<uint64_t>& open, uint64_t dominated,
                      uint64_t played) {
  uint64_t out = 0;
  for (size_t v = 0; v < closed.size(); ++v) {
    const bool fresh = (closed[v] & ~dominated) != 0;
    const bool touches = played == 0 || (open[v] & played) != 0;
    if (fresh && touches) out |= uint64_t{1} << v;
  }
  return out;
}

TEST_CASE("scalar kernels against the loop definition") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const size_t n = 1 + rng() % 64;
    std::vector<uint64_t> closed(n), open(n);
    for (size_t v = 0; v < n; ++v) {
      open[v] = rng() & rng();
      closed[v] = open[v] | (uint64_t{1} << v);
    }
    const uint64_t dominated = rng() | rng();
    const uint64_t played = trial % 5 == 0 ? 0 : rng() & rng() & rng();
    CHECK(MoveMaskScalar(closed, open, dominated, played) ==
          MoveMaskLoop(closed, open, dominated, played));
    const uint64_t selector = rng() & ((n == 64) ? ~uint64_t{0}
                                                 : (uint64_t{1} << n) - 1);
    uint64_t expect = 0;
    for (size_t v = 0; v < n; ++v) {
      if ((selector >> v) & 1) expect |= closed[v];
    }
    CHECK(UnionRowsScalar(closed, selector) == expect);
  }
}

TEST_CASE("every supported ISA matches scalar") {
  const std::vector<Isa> isas = SupportedIsas();
  REQUIRE(!isas.empty());
  CHECK(isas.front() == Isa::kScalar);
  MESSAGE("active kernel: " << IsaName(Active().isa));
  std::mt19937_64 rng(11);
  for (Isa isa : isas) {
    const KernelTable& t = TableFor(isa);
    CHECK(t.isa == isa);
    for (int trial = 0; trial < 5000; ++trial) {
      const size_t n = trial % 65;  // includes empty spans and odd tails
      std::vector<uint64_t> closed(n), open(n);
      for (size_t v = 0; v < n; ++v) {
        open[v] = rng() & rng();
        closed[v] = open[v] | (uint64_t{1} << v);
      }
      const uint64_t dominated = rng() | (trial % 3 == 0 ? rng() : 0);
      const uint64_t played = trial % 4 == 0 ? 0 : rng() & rng();
      CHECK(t.move_mask(closed, open, dominated, played) ==
            MoveMaskScalar(closed, open, dominated, played));
      const uint64_t selector = rng();
      const uint64_t in_range =
          n == 64 ? selector : selector & ((uint64_t{1} << n) - 1);
      CHECK(t.union_rows(closed, in_range) == UnionRowsScalar(closed, in_range));
    }
  }
  CHECK(IsSupported(Active().isa));
}

TEST_CASE("environment pin") {
  const char* pin = std::getenv("CDGAME_ISA");
  if (pin != nullptr && std::string_view(pin) == "scalar") {
    CHECK(Active().isa == Isa::kScalar);
  }
}

TEST_CASE("unsupported ISA is rejected") {
  for (Isa isa : {Isa::kAvx2, Isa::kNeon}) {
    if (!IsSupported(isa)) CHECK_THROWS_AS(TableFor(isa), std::invalid_argument);
  }
  CHECK(IsaName(Isa::kScalar) == "scalar");
}

}  // namespace
}  // namespace cdgame::kernels
