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

#include "gramsplit/entity.h"

#include <algorithm>
#include <cctype>

#include "gramsplit/error.h"
#include "gramsplit/text.h"

namespace gramsplit {

namespace {

std::string JoinSurfaces(const std::vector<Token> &tokens, size_t begin,
                         size_t end) {
  std::string out;
  for (size_t i = begin; i < end; ++i) {
    if (i > begin) out += ' ';
    out += tokens[i].surface;
  }
  return out;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

PosTag GuessTag(const std::string &w) {
  if (w.empty()) return PosTag::kOther;
  bool all_digits = std::all_of(w.begin(), w.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
  });
  if (all_digits) return PosTag::kNumber;
  if (std::isupper(static_cast<unsigned char>(w[0]))) return PosTag::kNoun;
  bool has_digit = std::any_of(w.begin(), w.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
  if (has_digit) return PosTag::kNoun;
  if (EndsWith(w, "ly")) return PosTag::kAdverb;
  for (const char *s : {"tion", "ment", "ness", "ity", "sis"}) {
    if (EndsWith(w, s)) return PosTag::kNoun;
  }
  for (const char *s : {"al", "ic", "ous", "ive", "ible", "able", "ful",
                        "less"}) {
    if (EndsWith(w, s)) return PosTag::kAdjective;
  }
  if (EndsWith(w, "ed") || EndsWith(w, "ing")) return PosTag::kVerb;
  return PosTag::kNoun;
}

PosTag ParseTag(const std::string &name, int line) {
  static const std::pair<const char *, PosTag> kNames[] = {
      {"DT", PosTag::kDeterminer}, {"JJ", PosTag::kAdjective},
      {"NN", PosTag::kNoun},       {"VB", PosTag::kVerb},
      {"RB", PosTag::kAdverb},     {"IN", PosTag::kPreposition},
      {"CC", PosTag::kConjunction}, {"PRP", PosTag::kPronoun},
      {"CD", PosTag::kNumber},
  };
  for (auto [n, t] : kNames) {
    if (name == n) return t;
  }
  throw ParseError(line, "unknown tag " + name);
}

}  // namespace

void PlaceholderTable::Add(const std::string &id, const std::string &surface) {
  if (Find(id) != nullptr) throw Error("duplicate placeholder id " + id);
  entries_.emplace_back(id, surface);
}

const std::string *PlaceholderTable::Find(const std::string &id) const {
  for (const auto &[k, v] : entries_) {
    if (k == id) return &v;
  }
  return nullptr;
}

Gazetteer::Gazetteer(const std::vector<std::string> &entries) {
  for (const std::string &e : entries) Add(e);
}

Gazetteer Gazetteer::Load(std::istream &in) {
  Gazetteer g;
  std::string line;
  while (std::getline(in, line)) {
    std::string entry = NormalizeWhitespace(line);
    if (entry.empty() || entry[0] == '#') continue;
    g.Add(entry);
  }
  return g;
}

void Gazetteer::Add(const std::string &entry) {
  std::string norm = NormalizeWhitespace(entry);
  if (norm.empty()) return;
  std::vector<std::string> parts;
  for (const Token &t : Tokenize(norm)) parts.push_back(t.surface);
  std::string key = JoinSurfaces(Tokenize(norm), 0, parts.size());
  if (!entries_.insert(key).second) return;
  auto &bucket = by_first_[parts[0]];
  bucket.push_back(std::move(parts));
  std::stable_sort(bucket.begin(), bucket.end(),
                   [](const auto &a, const auto &b) {
                     return a.size() > b.size();
                   });
}

bool Gazetteer::Contains(const std::string &entry) const {
  std::string norm = NormalizeWhitespace(entry);
  if (norm.empty()) return false;
  std::vector<Token> tokens = Tokenize(norm);
  return entries_.count(JoinSurfaces(tokens, 0, tokens.size())) > 0;
}

size_t Gazetteer::LongestMatchAt(const std::vector<Token> &tokens,
                                 size_t i) const {
  auto it = by_first_.find(tokens[i].surface);
  if (it == by_first_.end()) return 0;
  for (const auto &seq : it->second) {
    if (i + seq.size() > tokens.size()) continue;
    bool ok = true;
    for (size_t k = 0; k < seq.size() && ok; ++k) {
      ok = tokens[i + k].surface == seq[k] && !tokens[i + k].is_placeholder();
    }
    if (ok) return seq.size();
  }
  return 0;
}

std::vector<EntityMention> GazetteerRecognizer::Recognize(
    const Sentence &sentence) const {
  return RecognizeGenes(sentence, *gazetteer_);
}

std::vector<EntityMention> RecognizeGenes(const Sentence &sentence,
                                          const Gazetteer &gazetteer) {
  std::vector<EntityMention> mentions;
  const std::vector<Token> &tokens = sentence.tokens();
  size_t i = 0;
  while (i < tokens.size()) {
    size_t n = tokens[i].is_placeholder() ? 0
                                          : gazetteer.LongestMatchAt(tokens, i);
    if (n == 0) {
      ++i;
      continue;
    }
    mentions.push_back({i, i + n, JoinSurfaces(tokens, i, i + n),
                        EntityKind::kGene});
    i += n;
  }
  return mentions;
}

std::pair<Sentence, PlaceholderTable> SubstituteGenes(
    const Sentence &sentence, std::span<const EntityMention> mentions) {
  std::vector<EntityMention> sorted(mentions.begin(), mentions.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const EntityMention &a, const EntityMention &b) {
              return a.begin < b.begin;
            });
  for (size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k].begin >= sorted[k].end || sorted[k].end > sentence.size())
      throw OverlapError("mention span out of range");
    if (k > 0 && sorted[k].begin < sorted[k - 1].end)
      throw OverlapError("mentions '" + sorted[k - 1].surface + "' and '" +
                         sorted[k].surface + "'");
  }
  std::set<std::string> taken;
  for (const Token &t : sentence.tokens()) {
    if (t.is_placeholder()) taken.insert(t.surface);
  }
  PlaceholderTable table;
  std::vector<Token> out;
  const std::vector<Token> &tokens = sentence.tokens();
  size_t next_id = 0;
  size_t m = 0;
  for (size_t i = 0; i < tokens.size();) {
    if (m < sorted.size() && sorted[m].begin == i) {
      std::string id;
      do {
        id = "GENE" + std::to_string(next_id++);
      } while (taken.count(id) > 0);
      table.Add(id, JoinSurfaces(tokens, sorted[m].begin, sorted[m].end));
      out.push_back({id, {}, TokenKind::kPlaceholder});
      i = sorted[m].end;
      ++m;
    } else {
      out.push_back(tokens[i]);
      ++i;
    }
  }
  if (table.empty()) return {sentence, table};
  return {Sentence::FromTokens(sentence.id(), std::move(out),
                               sentence.provenance()),
          std::move(table)};
}

Sentence RestoreGenes(const Sentence &sentence, const PlaceholderTable &table,
                      bool strict) {
  std::vector<Token> out;
  bool changed = false;
  for (const Token &t : sentence.tokens()) {
    if (!t.is_placeholder()) {
      out.push_back(t);
      continue;
    }
    const std::string *surface = table.Find(t.surface);
    if (surface == nullptr) {
      if (strict) throw MissingEntry(t.surface);
      out.push_back(t);
      continue;
    }
    for (Token &r : Tokenize(*surface)) out.push_back(std::move(r));
    changed = true;
  }
  if (!changed) return sentence;
  return Sentence::FromTokens(sentence.id(), std::move(out),
                              sentence.provenance());
}

const char *PosTagName(PosTag tag) {
  switch (tag) {
    case PosTag::kDeterminer: return "DT";
    case PosTag::kAdjective: return "JJ";
    case PosTag::kNoun: return "NN";
    case PosTag::kVerb: return "VB";
    case PosTag::kAdverb: return "RB";
    case PosTag::kPreposition: return "IN";
    case PosTag::kConjunction: return "CC";
    case PosTag::kPronoun: return "PRP";
    case PosTag::kNumber: return "CD";
    case PosTag::kPunctuation: return "PUNCT";
    case PosTag::kPlaceholder: return "GENE";
    case PosTag::kOther: return "X";
  }
  return "X";
}

PosLexicon PosLexicon::Load(std::istream &in) {
  PosLexicon lex;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string text = NormalizeWhitespace(raw);
    if (text.empty() || text[0] == '#') continue;
    size_t sp = text.rfind(' ');
    if (sp == std::string::npos) throw ParseError(line, "expected: word TAG");
    lex.tags_[text.substr(0, sp)] = ParseTag(text.substr(sp + 1), line);
  }
  return lex;
}

PosTag PosLexicon::Tag(const Token &token, bool sentence_initial) const {
  if (token.is_placeholder()) return PosTag::kPlaceholder;
  if (token.is_punctuation()) return PosTag::kPunctuation;
  const std::string &w = token.surface;
  auto it = tags_.find(w);
  if (it != tags_.end()) return it->second;
  if (sentence_initial && !w.empty() &&
      std::isupper(static_cast<unsigned char>(w[0]))) {
    std::string lower = w;
    lower[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(w[0])));
    it = tags_.find(lower);
    if (it != tags_.end()) return it->second;
    return GuessTag(lower);
  }
  return GuessTag(w);
}

std::vector<PosTag> PosLexicon::TagSentence(const Sentence &sentence) const {
  std::vector<PosTag> tags;
  tags.reserve(sentence.size());
  for (size_t i = 0; i < sentence.size(); ++i) {
    tags.push_back(Tag(sentence[i], i == 0));
  }
  return tags;
}

std::vector<NounPhrase> ChunkNounPhrases(const Sentence &sentence,
                                         const PosLexicon &pos) {
  std::vector<PosTag> tags = pos.TagSentence(sentence);
  auto nounish = [&](size_t i) {
    return tags[i] == PosTag::kNoun || tags[i] == PosTag::kPlaceholder;
  };
  std::vector<NounPhrase> phrases;
  size_t i = 0;
  while (i < tags.size()) {
    size_t start = i;
    size_t j = i;
    if (tags[j] == PosTag::kDeterminer) ++j;
    while (j < tags.size() &&
           (tags[j] == PosTag::kAdjective || tags[j] == PosTag::kAdverb))
      ++j;
    size_t nouns_begin = j;
    while (j < tags.size() && nounish(j)) ++j;
    if (j == nouns_begin) {
      i = start + 1;
      continue;
    }
    bool has_placeholder = false;
    for (size_t k = start; k < j; ++k) {
      has_placeholder |= tags[k] == PosTag::kPlaceholder;
    }
    // An adverb stays in the phrase only while it modifies an adjective.
    size_t begin = start;
    while (begin < nouns_begin && tags[begin] == PosTag::kAdverb &&
           (begin + 1 == nouns_begin || tags[begin + 1] == PosTag::kNoun ||
            tags[begin + 1] == PosTag::kPlaceholder))
      ++begin;
    if (!has_placeholder) phrases.push_back({begin, j, j - 1});
    i = j;
  }
  return phrases;
}

std::vector<NounPhrase> SelectReplaceable(const Sentence &sentence,
                                          std::span<const NounPhrase> phrases,
                                          const PosLexicon &pos) {
  std::vector<PosTag> tags = pos.TagSentence(sentence);
  std::vector<NounPhrase> out;
  for (const NounPhrase &np : phrases) {
    if (np.length() < 2) continue;
    bool determined = false;
    bool descriptive = false;
    for (size_t k = np.begin; k < np.end; ++k) {
      determined |= tags[k] == PosTag::kDeterminer;
      descriptive |= tags[k] == PosTag::kAdjective;
      if (k != np.head && tags[k] == PosTag::kNoun) {
        const std::string &w = sentence[k].surface;
        bool opaque = std::any_of(w.begin() + (k == 0 ? 1 : 0), w.end(),
                                  [](char c) {
                                    return std::isupper(
                                               static_cast<unsigned char>(c)) ||
                                           std::isdigit(
                                               static_cast<unsigned char>(c));
                                  });
        descriptive |= opaque;
      }
    }
    if (!determined && descriptive) out.push_back(np);
  }
  return out;
}

Sentence ReplaceNpHeads(const Sentence &sentence,
                        std::span<const NounPhrase> phrases) {
  std::vector<NounPhrase> sorted(phrases.begin(), phrases.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const NounPhrase &a, const NounPhrase &b) {
              return a.begin < b.begin;
            });
  for (size_t k = 0; k < sorted.size(); ++k) {
    const NounPhrase &np = sorted[k];
    if (np.begin >= np.end || np.end > sentence.size() || np.head < np.begin ||
        np.head >= np.end)
      throw OverlapError("noun phrase span out of range");
    if (k > 0 && np.begin < sorted[k - 1].end)
      throw OverlapError("noun phrases overlap at token " +
                         std::to_string(np.begin));
    for (size_t i = np.begin; i < np.end; ++i) {
      if (sentence[i].is_placeholder())
        throw Error("noun phrase contains placeholder " + sentence[i].surface);
    }
  }
  std::vector<Token> out;
  bool changed = false;
  size_t m = 0;
  for (size_t i = 0; i < sentence.size();) {
    if (m < sorted.size() && sorted[m].begin == i) {
      out.push_back(sentence[sorted[m].head]);
      changed |= sorted[m].length() > 1;
      i = sorted[m].end;
      ++m;
    } else {
      out.push_back(sentence[i]);
      ++i;
    }
  }
  if (!changed) return sentence;
  if (!sorted.empty() && sorted[0].begin == 0 && sorted[0].length() > 1 &&
      std::isupper(static_cast<unsigned char>(sentence[0].surface[0]))) {
    out = CapitalizeFirst(std::move(out));
  }
  return Sentence::FromTokens(sentence.id(), std::move(out),
                              sentence.provenance());
}

}  // namespace gramsplit
