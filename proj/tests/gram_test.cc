// Copyright 2026 The Gramsplit Authors.
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <tuple>
#include <vector>

#include "gramsplit/error.h"
#include "gramsplit/gram.h"
#include "test_util.h"

namespace gramsplit {
namespace {

const char kCaptopril[] =
    "These effects were associated with significantly lower blood pressure, though "
    "within the normal range, in captopril-treated versus control animals.";

const Lexicon &Fixture() { return testing::DefaultResources().lexicon; }

GramScore Score(std::string_view text) {
  return ScoreSentence(Sentence::FromText("t", text), Fixture());
}

TEST_CASE("gram_value is ten per null link plus the disjunct cost") {
  CHECK(GramValue(1, 0) == 10);
  CHECK(GramValue(1, 2) == 12);
  CHECK(GramValue(0, 0) == 0);
  CHECK(GramValue(CostVector{2, 9, 0, 40}) == 29);
  CHECK(GramValue(3, 9) == 39);
}

TEST_CASE("encoding assumption violations surface") {
  CHECK_THROWS_AS(GramValue(0, 10), EncodingAssumptionViolated);
  try {
    GramValue(2, 13);
    FAIL("expected EncodingAssumptionViolated");
  } catch (const EncodingAssumptionViolated &e) {
    CHECK(e.unused() == 2);
    CHECK(e.dis() == 13);
  }
  CHECK_THROWS_AS(GramValue(-1, 0), EncodingAssumptionViolated);
}

TEST_CASE("gram order equals lexicographic (UNUSED, DIS) order") {
  for (int u1 = 0; u1 <= 20; ++u1)
    for (int d1 = 0; d1 <= 9; ++d1)
      for (int u2 = 0; u2 <= 20; ++u2)
        for (int d2 = 0; d2 <= 9; ++d2) {
          const bool lex = std::tie(u1, d1) < std::tie(u2, d2);
          REQUIRE((GramValue(u1, d1) < GramValue(u2, d2)) == lex);
        }
}

TEST_CASE("score_sentence uses the best linkage") {
  const GramScore amazing = Score("This is amazing.");
  CHECK(amazing.value == 0);
  CHECK(amazing.unused == 0);
  CHECK(amazing.dis == 0);
  REQUIRE(amazing.best_linkage.has_value());
  CHECK(amazing.best_linkage->cost.unused == 0);

  const GramScore skipped = Score("This is an amazing.");
  CHECK(skipped.value == 10);
  CHECK(std::tie(skipped.unused, skipped.dis) == std::make_tuple(1, 0));

  const GramScore costly = Score("This is an dangerously.");
  CHECK(costly.value == 12);
  CHECK(std::tie(costly.unused, costly.dis) == std::make_tuple(1, 2));
}

TEST_CASE("captopril sentence skips though and versus") {
  const GramScore score = Score(kCaptopril);
  CHECK(score.value == 20);
  CHECK(score.unused == 2);
  CHECK(score.dis == 0);
  REQUIRE(score.best_linkage.has_value());
  std::vector<std::string> skipped;
  for (int p : score.best_linkage->skipped) skipped.push_back(score.best_linkage->words[p]);
  CHECK(skipped == std::vector<std::string>{"though", "versus"});
}

TEST_CASE("captopril split suggestions") {
  CHECK(Score("These effects were associated with significantly lower blood pressure.").value ==
        0);
  const GramScore second = Score("Within the normal range, in captopril-treated versus control animals.");
  CHECK(second.value == 22);
  CHECK(std::tie(second.unused, second.dis) == std::make_tuple(2, 2));
  CHECK(Score("These effects were associated with significantly lower blood pressure in "
              "captopril-treated versus control animals.")
            .value == 10);
  CHECK(Score("Significantly lower blood pressure is though within the normal range.").value ==
        10);
}

TEST_CASE("score_sentence rejects empty input") {
  CHECK_THROWS_AS(ScoreSentence(Sentence(), Fixture()), EmptyInput);
}

TEST_CASE("score_linkages of nothing counts every word") {
  const GramScore none = ScoreLinkages({}, 4);
  CHECK(none.value == 40);
  CHECK_FALSE(none.best_linkage.has_value());
}

TEST_CASE("gate_split accepts ties and rejects excess") {
  const std::vector<int> a = {0, 22};
  const std::vector<int> b = {10, 10};
  GateDecision rejected = GateSplit(20, a);
  CHECK_FALSE(rejected.accepted);
  CHECK(rejected.original_gram == 20);
  CHECK(rejected.part_grams == a);
  CHECK(GateSplit(20, b).accepted);
  for (int x : {0, 7, 10, 35}) {
    const std::vector<int> same = {x};
    CHECK(GateSplit(x, same).accepted);
  }
  CHECK_THROWS_AS(GateSplit(20, std::vector<int>{}), EmptyInput);
}

TEST_CASE("gate_split on scores matches the integer form") {
  GramScore original;
  original.value = 20;
  std::vector<GramScore> parts(2);
  parts[0].value = 10;
  parts[1].value = 10;
  CHECK(GateSplit(original, parts).accepted);
  parts[1].value = 11;
  CHECK_FALSE(GateSplit(original, parts).accepted);
  CHECK(GateSplit(original, parts).part_grams == std::vector<int>{10, 11});
  CHECK_THROWS_AS(GateSplit(original, std::vector<GramScore>{}), EmptyInput);
}

}  // namespace
}  // namespace gramsplit
