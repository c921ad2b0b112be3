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

#include <algorithm>

#include "cdgame/analysis.h"
#include "cdgame/families.h"
#include "cdgame/verify_suite.h"
#include "doctest.h"

namespace cdgame {
namespace {

bool AllPass(const std::vector<ClaimResult>& rs) {
  return !rs.empty() && std::all_of(rs.begin(), rs.end(), [](const auto& r) {
    return r.verdict == Verdict::kPass;
  });
}

TEST_CASE("claim records") {
  const ClaimResult r = MakeClaim("x", "inst", "3", "3");
  CHECK(r.verdict == Verdict::kPass);
  CHECK(MakeClaim("x", "inst", "3", "4").verdict == Verdict::kFail);
  const auto j = r.ToJson(false);
  CHECK(j.dump() ==
        R"({"claim":"x","expected":"3","instance":"inst","observed":"3","verdict":"pass"})");
  CHECK(r.ToJson(true).contains("elapsed_ms"));
}

TEST_CASE("small values") {
  CHECK(AllPass(CheckSmallValues(Cycle(4), "cycle:4")));
  CHECK(AllPass(CheckSmallValues(Complete(6), "complete:6")));
  CHECK(AllPass(CheckSmallValues(Path(6), "path:6")));
  GraphValues c4(Cycle(4));
  CHECK(c4.D() == GameValue::Finite(2));
  GraphValues k6(Complete(6));
  CHECK(k6.S() == GameValue::Finite(1));
}

TEST_CASE("diameter and staller-start bounds") {
  CHECK(CheckDiameterBounds(Graph(1), "k1").verdict == Verdict::kPass);
  CHECK(CheckDiameterBounds(Path(8), "path:8").verdict == Verdict::kPass);
  CHECK(CheckStallerStartBounds(GadgetChain(3), "gn:3").verdict ==
        Verdict::kPass);
}

TEST_CASE("gadget chain claims") {
  for (int n = 2; n <= 3; ++n) CHECK(AllPass(CheckGadgetChain(n)));
}

TEST_CASE("lexicographic claims") {
  const auto a = CheckLexicographic(Path(3), "path:3", Path(4), "path:4");
  CHECK(AllPass(a));
  CHECK(a.front().expected == "2");
  CHECK(AllPass(CheckLexicographic(Cycle(5), "cycle:5", Complete(2),
                                   "complete:2")));
  const auto c = CheckLexicographic(Complete(2), "complete:2", Path(4),
                                    "path:4");
  CHECK(AllPass(c));
  CHECK(c[1].expected == "2");
}

TEST_CASE("ladder claims for n = 4, 5") {
  const auto four = CheckLadders(4);
  CHECK(four.size() == 4);
  CHECK(AllPass(four));
  CHECK(four[0].observed == "4");
  CHECK(four[1].observed == "3");
  CHECK(AllPass(CheckLadders(5)));
}

TEST_CASE("predomination scans") {
  const Graph fig = PredominationIncreaseGraph();
  const PredominationScan s = ScanPredomination(fig, "raise");
  CHECK(s.k_plus.has_value());
  CHECK(*s.k_plus >= 1);
  CHECK(s.per_vertex[*fig.FindLabel("c")] == GameValue::Finite(8));
  for (int n = 4; n <= 8; ++n) {
    const PredominationScan c = ScanPredomination(Cycle(n), "cycle");
    CHECK(c.all_different);
    CHECK_FALSE(c.some_increase);
    CHECK(c.k_minus == 1);
    for (GameValue v : c.per_vertex) CHECK(v == GameValue::Finite(n - 3));
  }
  // Never values stay out of k arithmetic.
  const PredominationScan p = ScanPredomination(Path(5), "path:5");
  CHECK(p.never_vertices.empty());
  CHECK(p.ToJson()["graph"] == "path:5");
}

TEST_CASE("cut vertex claims") {
  CHECK(AllPass(CheckCutVertex(Path(6), "path:6")));
  const auto star = CheckCutVertex(Star(5), "star:5");
  CHECK(AllPass(star));
  CHECK(star.size() == 2);
  CHECK(AllPass(CheckCutVertex(PredominationIncreaseGraph(), "raise")));
}

TEST_CASE("skip and pass claims") {
  CHECK(AllPass(CheckSkipAndPass(FanChain(2), "fan:2", SkipExpectation{3, 4})));
  CHECK(AllPass(CheckSkipAndPass(HatChain(1), "hat:1", SkipExpectation{6, 5})));
  CHECK(AllPass(CheckSkipAndPass(Path(6), "path:6", SkipExpectation{4, 4})));
  // A wrong expectation is reported, not hidden.
  const auto wrong =
      CheckSkipAndPass(Path(6), "path:6", SkipExpectation{5, 4});
  CHECK_FALSE(AllPass(wrong));
}

TEST_CASE("trees") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    CHECK(CheckTree(RandomTree(9, seed), "tree").verdict == Verdict::kPass);
  }
}

TEST_CASE("oracle equivalence claim") {
  CHECK(CheckOracleEquivalence(Cycle(5), "cycle:5").verdict == Verdict::kPass);
}

TEST_CASE("budget exhaustion is its own verdict") {
  CheckOptions tight;
  tight.solve.time_budget = std::chrono::milliseconds(0);
  const auto r = CheckSkipAndPass(LexicographicProduct(Cycle(8), Path(4)),
                                  "lex", std::nullopt, tight);
  REQUIRE(r.size() == 1);
  CHECK(r[0].verdict == Verdict::kBudgetExceeded);
}

TEST_CASE("suite groups") {
  const auto& groups = SuiteGroups();
  CHECK(groups.size() == 11);
  CHECK_THROWS_AS(RunGroup("nope", SuiteOptions{}), std::invalid_argument);
  SuiteOptions missing;
  missing.corpus.emplace_back("/nonexistent.g6");
  CHECK_THROWS(RunSuite({"small-values"}, missing));
  CHECK(AllPass(RunGroup("hamming", SuiteOptions{})));
  const auto a = RunGroup("paths-cycles", SuiteOptions{});
  SuiteOptions threaded;
  threaded.workers = 3;
  const auto b = RunGroup("paths-cycles", threaded);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].ToJson(false) == b[i].ToJson(false));
  }
}

TEST_CASE("parallel map keeps order and forwards errors") {
  const auto out = ParallelMap<int>(100, 4, [](int i) { return i * i; });
  for (int i = 0; i < 100; ++i) CHECK(out[i] == i * i);
  CHECK_THROWS_AS(ParallelMap<int>(10, 3,
                                   [](int i) -> int {
                                     if (i == 7) throw std::runtime_error("x");
                                     return i;
                                   }),
                  std::runtime_error);
}

}  // namespace
}  // namespace cdgame
