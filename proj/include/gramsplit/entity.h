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

#ifndef GRAMSPLIT_ENTITY_H_
#define GRAMSPLIT_ENTITY_H_

#include <istream>
#include <map>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gramsplit/text.h"

namespace gramsplit {

enum class EntityKind { kGene };

// A mention over the token range [begin, end) of a sentence.
struct EntityMention {
  size_t begin = 0;
  size_t end = 0;
  std::string surface;
  EntityKind kind = EntityKind::kGene;

  bool operator==(const EntityMention &) const = default;
};

// Placeholder id ("GENE0", "GENE1", ...) to original surface, in insertion
// order.
class PlaceholderTable {
 public:
  // Records surface under id. Ids must be unique.
  void Add(const std::string &id, const std::string &surface);

  // Returns nullptr when id is unknown.
  const std::string *Find(const std::string &id) const;

  const std::vector<std::pair<std::string, std::string>> &entries() const {
    return entries_;
  }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

// Token sequences matched case-sensitively. Entries are tokenized, so
// "IL - 6" and "IL  -  6" are the same entry.
class Gazetteer {
 public:
  Gazetteer() = default;
  explicit Gazetteer(const std::vector<std::string> &entries);

  // One entry per line; blank lines and '#' comments are skipped.
  static Gazetteer Load(std::istream &in);

  void Add(const std::string &entry);
  bool Contains(const std::string &entry) const;
  bool empty() const { return entries_.empty(); }
  size_t size() const { return entries_.size(); }

  // Longest entry starting at token i, in tokens; 0 when none matches.
  size_t LongestMatchAt(const std::vector<Token> &tokens, size_t i) const;

  // Normalized entry strings (tokens joined by one space).
  std::set<std::string> Entries() const { return entries_; }

 private:
  std::set<std::string> entries_;
  // First token -> token sequences, longest first.
  std::unordered_map<std::string, std::vector<std::vector<std::string>>>
      by_first_;
};

// Pluggable gene recognizer. The built-in implementation is a gazetteer
// matcher; gold annotations or external taggers plug in through the same
// interface.
class GeneRecognizer {
 public:
  virtual ~GeneRecognizer() = default;
  virtual std::vector<EntityMention> Recognize(
      const Sentence &sentence) const = 0;
};

class GazetteerRecognizer : public GeneRecognizer {
 public:
  explicit GazetteerRecognizer(const Gazetteer *gazetteer)
      : gazetteer_(gazetteer) {}
  std::vector<EntityMention> Recognize(const Sentence &sentence) const override;

 private:
  const Gazetteer *gazetteer_;
};

// Longest non-overlapping matches, scanning left to right. Placeholder tokens
// never start a match.
std::vector<EntityMention> RecognizeGenes(const Sentence &sentence,
                                          const Gazetteer &gazetteer);

// Replaces each mention with the next free placeholder id, in order of span
// start. Ids already present in the sentence are skipped. Throws
// OverlapError on overlapping mentions.
std::pair<Sentence, PlaceholderTable> SubstituteGenes(
    const Sentence &sentence, std::span<const EntityMention> mentions);

// Inverse of SubstituteGenes. With strict set, a placeholder without a table
// entry raises MissingEntry; otherwise it is left in place.
Sentence RestoreGenes(const Sentence &sentence, const PlaceholderTable &table,
                      bool strict = true);

enum class PosTag {
  kDeterminer,
  kAdjective,
  kNoun,
  kVerb,
  kAdverb,
  kPreposition,
  kConjunction,
  kPronoun,
  kNumber,
  kPunctuation,
  kPlaceholder,
  kOther,
};

const char *PosTagName(PosTag tag);

// Word list plus suffix heuristics. Unknown words fall back to: digits ->
// number; -ly -> adverb; -ed/-ing -> verb; -al/-ic/-ous/-ive/-ible/-able/
// -ful/-less -> adjective; everything else (capitalized, -s, -tion, -ment,
// alphanumerics) -> noun.
class PosLexicon {
 public:
  // Lines of "word TAG" with TAG in DT JJ NN VB RB IN CC PRP CD.
  static PosLexicon Load(std::istream &in);

  void Set(const std::string &word, PosTag tag) { tags_[word] = tag; }

  // sentence_initial allows a lowercase lookup of a capitalized word.
  PosTag Tag(const Token &token, bool sentence_initial = false) const;

  std::vector<PosTag> TagSentence(const Sentence &sentence) const;

 private:
  std::unordered_map<std::string, PosTag> tags_;
};

// A noun phrase over tokens [begin, end) with its head token index.
struct NounPhrase {
  size_t begin = 0;
  size_t end = 0;
  size_t head = 0;

  size_t length() const { return end - begin; }
  bool operator==(const NounPhrase &) const = default;
};

// Maximal runs of determiner? (adverb|adjective)* noun+. The head is the
// rightmost noun. Runs touching a placeholder are dropped.
std::vector<NounPhrase> ChunkNounPhrases(const Sentence &sentence,
                                         const PosLexicon &pos);

// The phrases worth compressing: more than one token, no determiner, and at
// least one descriptive modifier (an adjective, or an abbreviation-like noun
// modifier carrying capitals or digits such as "RTS" or "HT29"). Determined
// phrases are kept whole because later splits reuse them as referring
// expressions; plain noun compounds ("calcium mobilization") are kept too.
std::vector<NounPhrase> SelectReplaceable(const Sentence &sentence,
                                          std::span<const NounPhrase> phrases,
                                          const PosLexicon &pos);

// Replaces each phrase by its head token. Single-token phrases are left as
// they are. Throws OverlapError on overlapping phrases.
Sentence ReplaceNpHeads(const Sentence &sentence,
                        std::span<const NounPhrase> phrases);

}  // namespace gramsplit

#endif  // GRAMSPLIT_ENTITY_H_
