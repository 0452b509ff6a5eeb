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

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gramsplit/entity.h"
#include "gramsplit/error.h"
#include "test_util.h"

namespace gramsplit {
namespace {

Sentence S(std::string_view text) { return Sentence::FromText("t", text); }

const PosLexicon &Pos() { return testing::DefaultResources().pos; }

const char kCbp[] = "Mutations in CBP have recently been identified in RTS patients .";

// Greedy leftmost-longest matching written against Contains only: at each
// position every possible end is tried, longest first.
std::vector<std::pair<size_t, size_t>> LongestMatchOracle(const Sentence &s,
                                                          const Gazetteer &g) {
  std::vector<std::pair<size_t, size_t>> spans;
  size_t i = 0;
  while (i < s.size()) {
    size_t best = 0;
    if (!s[i].is_placeholder()) {
      for (size_t end = s.size(); end > i; --end) {
        std::string joined;
        for (size_t k = i; k < end; ++k) joined += (k > i ? " " : "") + s[k].surface;
        if (g.Contains(joined)) {
          best = end - i;
          break;
        }
      }
    }
    if (best > 0) {
      spans.emplace_back(i, i + best);
      i += best;
    } else {
      ++i;
    }
  }
  return spans;
}

std::vector<std::pair<size_t, size_t>> Spans(const std::vector<EntityMention> &ms) {
  std::vector<std::pair<size_t, size_t>> out;
  for (const auto &m : ms) out.emplace_back(m.begin, m.end);
  return out;
}

const NounPhrase *PhraseWith(const std::vector<NounPhrase> &nps, const Sentence &s,
                             const std::string &word) {
  for (const NounPhrase &np : nps)
    for (size_t i = np.begin; i < np.end; ++i)
      if (s[i].surface == word) return &np;
  return nullptr;
}

TEST_CASE("recognize_genes finds gazetteer entries") {
  const Sentence s = S(kCbp);
  auto ms = RecognizeGenes(s, Gazetteer({"CBP"}));
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].surface == "CBP");
  CHECK(ms[0].begin == 2);
  CHECK(ms[0].end == 3);
  CHECK(RecognizeGenes(s, Gazetteer()).empty());
  // Case sensitive.
  CHECK(RecognizeGenes(s, Gazetteer({"cbp"})).empty());
}

TEST_CASE("longest match wins, multi-token first") {
  const Sentence s = S("IL - 6 binds gp130");
  const Gazetteer g({"IL - 6", "IL", "gp130"});
  auto ms = RecognizeGenes(s, g);
  REQUIRE(ms.size() == 2);
  CHECK(ms[0].surface == "IL - 6");
  CHECK(ms[0].end - ms[0].begin == 3);
  CHECK(ms[1].surface == "gp130");
  CHECK(Spans(ms) == LongestMatchOracle(s, g));
}

TEST_CASE("matcher agrees with the brute-force oracle on random text") {
  std::mt19937 rng(11);
  const std::vector<std::string> vocab = {"IL", "-", "6", "alpha", "beta", "PIX",
                                          "binds", "and", "GENE0", "receptor"};
  for (int trial = 0; trial < 300; ++trial) {
    Gazetteer g;
    const int entries = 1 + static_cast<int>(rng() % 5);
    for (int e = 0; e < entries; ++e) {
      std::string entry;
      const int len = 1 + static_cast<int>(rng() % 3);
      for (int k = 0; k < len; ++k) entry += (k ? " " : "") + vocab[rng() % 8];
      g.Add(entry);
    }
    std::vector<std::string> words;
    const int n = 1 + static_cast<int>(rng() % 10);
    for (int k = 0; k < n; ++k) words.push_back(vocab[rng() % vocab.size()]);
    const Sentence s = Sentence::FromSurfaces("r", words);
    CAPTURE(s.text());
    CHECK(Spans(RecognizeGenes(s, g)) == LongestMatchOracle(s, g));
  }
}

TEST_CASE("gazetteer file format") {
  std::istringstream in("# genes\nIL  -  6\n\ngp130\n  CBP  \n");
  Gazetteer g = Gazetteer::Load(in);
  CHECK(g.size() == 3);
  CHECK(g.Contains("IL - 6"));
  CHECK(g.Contains("CBP"));
  CHECK_FALSE(g.Contains("# genes"));
}

TEST_CASE("substitute_genes numbers placeholders left to right") {
  const Sentence s = S(kCbp);
  auto [out, table] = SubstituteGenes(s, RecognizeGenes(s, Gazetteer({"CBP"})));
  CHECK(out.text() == "Mutations in GENE0 have recently been identified in RTS patients.");
  CHECK(out[2].is_placeholder());
  REQUIRE(table.size() == 1);
  CHECK(*table.Find("GENE0") == "CBP");

  auto [same, empty] = SubstituteGenes(s, std::vector<EntityMention>{});
  CHECK(same.Surfaces() == s.Surfaces());
  CHECK(empty.empty());

  const Sentence two = S("gp130 binds IL - 6 .");
  std::vector<EntityMention> ms = {{2, 5, "IL - 6"}, {0, 1, "gp130"}};
  auto [out2, table2] = SubstituteGenes(two, ms);
  CHECK(out2.text() == "GENE0 binds GENE1.");
  CHECK(*table2.Find("GENE0") == "gp130");
  CHECK(*table2.Find("GENE1") == "IL - 6");
  CHECK(table2.entries()[0].first == "GENE0");

  std::vector<EntityMention> overlapping = {{0, 2, "gp130 binds"}, {1, 3, "binds IL"}};
  CHECK_THROWS_AS(SubstituteGenes(two, overlapping), OverlapError);
}

TEST_CASE("substitute_genes avoids ids already in the text") {
  const Sentence s = S("GENE0 binds CBP .");
  auto [out, table] = SubstituteGenes(s, RecognizeGenes(s, Gazetteer({"CBP"})));
  CHECK(out.text() == "GENE0 binds GENE1.");
  CHECK(*table.Find("GENE1") == "CBP");
}

TEST_CASE("restore_genes inverts substitution") {
  PlaceholderTable table;
  table.Add("GENE0", "CBP");
  CHECK(RestoreGenes(S("Mutations in GENE0 have been found ."), table).text() ==
        "Mutations in CBP have been found.");
  const Sentence plain = S("Nothing to restore here .");
  CHECK(RestoreGenes(plain, PlaceholderTable()).Surfaces() == plain.Surfaces());
  CHECK_THROWS_AS(RestoreGenes(S("GENE7 binds ."), table), MissingEntry);
  CHECK(RestoreGenes(S("GENE7 binds ."), table, false).text() == "GENE7 binds .");
  try {
    RestoreGenes(S("GENE7 binds ."), table);
  } catch (const MissingEntry &e) {
    CHECK(e.placeholder() == "GENE7");
  }
}

TEST_CASE("substitute then restore is the identity on random sentences") {
  std::mt19937 rng(3);
  const std::vector<std::string> genes = {"CBP", "IL - 6", "gp130", "FGF - 7", "KGFR",
                                          "lymphotoxin beta receptor", "Rac1", "PAK"};
  const std::vector<std::string> words = {"binds", "the", "receptor", ",", "and",
                                          "activates", "in", "cells", "(", ")", "-"};
  const Gazetteer g(genes);
  int with_mentions = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::string text;
    const int n = 2 + static_cast<int>(rng() % 12);
    for (int k = 0; k < n; ++k) {
      text += (rng() % 3 == 0 ? genes[rng() % genes.size()] : words[rng() % words.size()]);
      text += " ";
    }
    text += ".";
    const Sentence s = S(text);
    CAPTURE(text);
    auto [sub, table] = SubstituteGenes(s, RecognizeGenes(s, g));
    with_mentions += table.empty() ? 0 : 1;
    for (const Token &t : sub.tokens()) {
      if (t.is_placeholder()) CHECK(table.Find(t.surface) != nullptr);
    }
    const Sentence back = RestoreGenes(sub, table);
    CHECK(back.Surfaces() == s.Surfaces());
    CHECK(back.text() == (table.empty() ? s.text() : Detokenize(s.tokens())));
  }
  CHECK(with_mentions > 50);
}

TEST_CASE("pos lexicon and suffix heuristics") {
  const PosLexicon &pos = Pos();
  auto tag = [&](const char *w) { return pos.Tag(Tokenize(w)[0]); };
  CHECK(tag("the") == PosTag::kDeterminer);
  CHECK(tag("hydrophobic") == PosTag::kAdjective);
  CHECK(tag("significantly") == PosTag::kAdverb);
  CHECK(tag("induced") == PosTag::kVerb);
  CHECK(tag("patients") == PosTag::kNoun);
  CHECK(tag("mobilization") == PosTag::kNoun);
  CHECK(tag("RTS") == PosTag::kNoun);
  CHECK(tag("12") == PosTag::kNumber);
  CHECK(tag("GENE3") == PosTag::kPlaceholder);
  CHECK(tag(",") == PosTag::kPunctuation);
  CHECK(pos.Tag(Tokenize("The")[0], true) == PosTag::kDeterminer);
  std::istringstream in("# list\nzork JJ\n");
  CHECK(PosLexicon::Load(in).Tag(Tokenize("zork")[0]) == PosTag::kAdjective);
  std::istringstream bad("zork XX\n");
  CHECK_THROWS_AS(PosLexicon::Load(bad), ParseError);
}

TEST_CASE("chunk_noun_phrases finds heads") {
  const Sentence s = S(kCbp);
  auto nps = ChunkNounPhrases(s, Pos());
  const NounPhrase *rts = PhraseWith(nps, s, "RTS");
  REQUIRE(rts != nullptr);
  CHECK(s[rts->head].surface == "patients");
  CHECK(rts->length() == 2);

  CHECK(ChunkNounPhrases(S("GENE0"), Pos()).empty());

  const Sentence viral = S("the viral IL - 6 - gp130 binding interfaces");
  auto vnps = ChunkNounPhrases(viral, Pos());
  const NounPhrase *np = PhraseWith(vnps, viral, "interfaces");
  REQUIRE(np != nullptr);
  CHECK(viral[np->head].surface == "interfaces");
  CHECK(np->head == np->end - 1);
}

TEST_CASE("placeholders never sit inside a chunk") {
  std::mt19937 rng(5);
  const std::vector<std::string> words = {"the", "viral", "GENE0", "binding", "GENE1",
                                          "receptor", "cells", "binds", "human", "in"};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::string> ws;
    const int n = 1 + static_cast<int>(rng() % 9);
    for (int k = 0; k < n; ++k) ws.push_back(words[rng() % words.size()]);
    const Sentence s = Sentence::FromSurfaces("r", ws);
    for (const NounPhrase &np : ChunkNounPhrases(s, Pos())) {
      CHECK(np.begin <= np.head);
      CHECK(np.head < np.end);
      CHECK(s[np.head].is_word());
      for (size_t i = np.begin; i < np.end; ++i) CHECK_FALSE(s[i].is_placeholder());
    }
  }
}

TEST_CASE("replace_np_heads keeps the head") {
  const Sentence s = S("Mutations in GENE0 have recently been identified in RTS patients .");
  auto nps = ChunkNounPhrases(s, Pos());
  auto chosen = SelectReplaceable(s, nps, Pos());
  const Sentence out = ReplaceNpHeads(s, chosen);
  CHECK(out.text() == "Mutations in GENE0 have recently been identified in patients.");

  const Sentence row1 = S("the viral cytokine largely uses hydrophobic amino acids to contact GENE1 .");
  const Sentence replaced =
      ReplaceNpHeads(row1, SelectReplaceable(row1, ChunkNounPhrases(row1, Pos()), Pos()));
  CHECK(replaced.text() == "the viral cytokine largely uses acids to contact GENE1.");

  const Sentence one = S("cells grow .");
  std::vector<NounPhrase> single = {{0, 1, 0}};
  CHECK(ReplaceNpHeads(one, single).Surfaces() == one.Surfaces());

  std::vector<NounPhrase> overlap = {{0, 2, 1}, {1, 3, 2}};
  CHECK_THROWS_AS(ReplaceNpHeads(S("a b c d"), overlap), OverlapError);
}

TEST_CASE("every replaced phrase shrinks to one token") {
  for (const std::string &line : testing::FixtureLines("gate_corpus.txt")) {
    const Sentence s = S(line);
    auto chosen = SelectReplaceable(s, ChunkNounPhrases(s, Pos()), Pos());
    const Sentence out = ReplaceNpHeads(s, chosen);
    size_t removed = 0;
    for (const NounPhrase &np : chosen) removed += np.length() - 1;
    CHECK(out.size() == s.size() - removed);
    // Each head survives, in order.
    size_t at = 0;
    for (const NounPhrase &np : chosen) {
      const std::string &head = s[np.head].surface;
      bool found = false;
      for (; at < out.size(); ++at) {
        if (out[at].surface == head) {
          found = true;
          ++at;
          break;
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("selection skips determined, plain and single-word phrases") {
  const Sentence s = S("The sequences confer calcium mobilization on cells .");
  auto chosen = SelectReplaceable(s, ChunkNounPhrases(s, Pos()), Pos());
  CHECK(chosen.empty());
}

}  // namespace
}  // namespace gramsplit
