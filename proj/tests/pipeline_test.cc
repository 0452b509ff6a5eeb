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

#include <sstream>
#include <string>
#include <vector>

#include "gramsplit/error.h"
#include "gramsplit/pipeline.h"
#include "test_util.h"

namespace gramsplit {
namespace {

using testing::DefaultResources;

using testing::LoadTable;
using testing::TableRow;

// Token sequence with whitespace normalized and terminal punctuation dropped.
std::vector<std::string> Comparable(const std::string &text) {
  std::vector<std::string> words = testing::Words(text);
  while (!words.empty() && (words.back() == "." || words.back() == "!" || words.back() == "?"))
    words.pop_back();
  return words;
}

std::vector<std::string> Run(const std::string &text) {
  return RestoredOutputs(SimplifyPipeline(text, DefaultResources()));
}

TEST_CASE("table rows two and three match the reference output") {
  int checked = 0;
  for (const TableRow &row : LoadTable()) {
    if (row.row != 2 && row.row != 3) continue;
    CAPTURE(row.row);
    const std::vector<std::string> out = Run(row.input);
    REQUIRE(out.size() == row.reference.size());
    for (size_t i = 0; i < out.size(); ++i) CHECK(Comparable(out[i]) == Comparable(row.reference[i]));
    ++checked;
  }
  CHECK(checked == 2);
}

TEST_CASE("table rows match their regression snapshots") {
  const std::vector<TableRow> rows = LoadTable();
  REQUIRE(rows.size() == 7);
  for (const TableRow &row : rows) {
    CAPTURE(row.row);
    std::vector<std::string> out = Run(row.input);
    for (std::string &s : out) s = NormalizeWhitespace(s);
    std::vector<std::string> expected = row.snapshot;
    for (std::string &s : expected) s = NormalizeWhitespace(s);
    CHECK(out == expected);
  }
}

TEST_CASE("gene substitution and restoration in the pipeline") {
  Resources r = DefaultResources();
  r.gazetteer = Gazetteer(std::vector<std::string>{"CBP"});
  const Sentence input = Sentence::FromText(
      "s", "Mutations in CBP have recently been identified in RTS patients.");
  auto [prepared, table] = PrepareSentence(input, r);
  CHECK(testing::Words(prepared.text()) ==
        testing::Words("Mutations in GENE0 have recently been identified in patients."));
  REQUIRE(table.size() == 1);
  REQUIRE(table.Find("GENE0") != nullptr);
  CHECK(*table.Find("GENE0") == "CBP");
  CHECK(RestoreGenes(prepared, table).text() ==
        "Mutations in CBP have recently been identified in patients.");

  SimplificationResult result = SimplifyPipeline(input, r);
  CHECK(result.original.text() == input.text());
  CHECK(RestoredOutputs(result) ==
        std::vector<std::string>{"Mutations in CBP have recently been identified in patients."});
}

TEST_CASE("row four placeholders restore to the gazetteer names") {
  const std::string input =
      "It has been shown that LIGHT triggers apoptosis of various tumor cells including "
      "HT29 cells that express both lymphotoxin beta receptor (LTbetaR) and HVEM / TR2 "
      "receptors.";
  SimplificationResult result = SimplifyPipeline(input, DefaultResources());
  CHECK_FALSE(result.placeholders.empty());
  for (const Sentence &s : result.outputs) {
    for (const Token &t : s.tokens()) {
      if (t.is_placeholder()) CHECK(result.placeholders.Find(t.surface) != nullptr);
    }
  }
  for (const std::string &s : RestoredOutputs(result)) CHECK(s.find("GENE") == std::string::npos);
  CHECK(RestoredOutputs(result).front() == "LIGHT triggers apoptosis of cells including cells.");
}

TEST_CASE("captopril through the pipeline") {
  SimplificationResult result = SimplifyPipeline(
      "These effects were associated with significantly lower blood pressure, though within "
      "the normal range, in captopril-treated versus control animals.",
      DefaultResources());
  REQUIRE(result.trace.size() >= 2);
  CHECK(result.trace[0].rule_id == "conjunction_infix_subordination");
  CHECK_FALSE(result.trace[0].decision.accepted);
  CHECK(result.trace[1].rule_id == "apposition_nonrestrictive");
  CHECK(result.trace[1].decision.accepted);
  CHECK(result.trace[1].decision.part_grams == std::vector<int>{10, 10});
}

TEST_CASE("a custom recognizer replaces the gazetteer") {
  struct FirstWord : GeneRecognizer {
    std::vector<EntityMention> Recognize(const Sentence &s) const override {
      return {EntityMention{0, 1, s[0].surface, EntityKind::kGene}};
    }
  } recognizer;
  auto [prepared, table] = PrepareSentence(
      Sentence::FromText("s", "Affixin binds alphaPIX."), DefaultResources(), &recognizer);
  CHECK(prepared[0].surface == "GENE0");
  CHECK(*table.Find("GENE0") == "Affixin");
}

TEST_CASE("pipeline rejects empty input") {
  CHECK_THROWS_AS(SimplifyPipeline("", DefaultResources()), EmptyInput);
  CHECK_THROWS_AS(SimplifyPipeline("   ", DefaultResources()), EmptyInput);
  CHECK_THROWS_AS(PrepareSentence(Sentence(), DefaultResources()), EmptyInput);
}

TEST_CASE("default data is embedded") {
  CHECK_FALSE(DefaultData("fixture.dict").empty());
  CHECK_FALSE(DefaultData("rules.conf").empty());
  CHECK(DefaultResources().gazetteer.Contains("CBP"));
}

}  // namespace
}  // namespace gramsplit
