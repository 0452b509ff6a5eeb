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

#ifndef GRAMSPLIT_TEXT_H_
#define GRAMSPLIT_TEXT_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gramsplit {

enum class TokenKind { kWord, kPunctuation, kPlaceholder };

// Half-open byte range [start, end) into the owning sentence's text.
struct Span {
  size_t start = 0;
  size_t end = 0;

  bool operator==(const Span &) const = default;
};

struct Token {
  std::string surface;
  Span span;
  TokenKind kind = TokenKind::kWord;

  bool is_word() const { return kind == TokenKind::kWord; }
  bool is_punctuation() const { return kind == TokenKind::kPunctuation; }
  bool is_placeholder() const { return kind == TokenKind::kPlaceholder; }
};

struct Provenance {
  std::string document_id;
  int index = 0;
};

// Splits text into word, punctuation and placeholder tokens. Text is
// expected in the pre-spaced style of biomedical corpora: runs of
// non-whitespace are tokens, except that brackets and quotes are split off
// the front, clause punctuation and closing brackets off the back, and the
// terminal .?! off the last chunk. Internal hyphens stay attached, spaced
// hyphens ("IL - 6") are their own tokens. Surfaces of the form GENE<n> are
// classified as placeholders. Throws EmptyInput on blank text.
std::vector<Token> Tokenize(std::string_view text);

// Joins token surfaces with single spaces, attaching clause punctuation and
// closing brackets to the previous token and opening brackets to the next.
// Throws EmptyInput on an empty list.
std::string Detokenize(std::span<const Token> tokens);
std::string Detokenize(std::span<const std::string> surfaces);

// Collapses whitespace runs to one space and trims both ends.
std::string NormalizeWhitespace(std::string_view text);

// True for surfaces such as "GENE0", "GENE17".
bool IsPlaceholderSurface(std::string_view surface);

// Classifies a raw surface as word or punctuation.
TokenKind ClassifySurface(std::string_view surface);

// A tokenized sentence. Immutable once built; every transformation produces
// a new Sentence whose text is the detokenized token list and whose spans
// index into that text.
class Sentence {
 public:
  Sentence() = default;

  static Sentence FromText(std::string id, std::string_view text,
                           Provenance provenance = {});

  // Rebuilds text from the tokens and recomputes every span. Token kinds are
  // kept, so substituted placeholders survive.
  static Sentence FromTokens(std::string id, std::vector<Token> tokens,
                             Provenance provenance = {});

  // Convenience for building from bare surfaces (kinds are classified).
  static Sentence FromSurfaces(std::string id,
                               const std::vector<std::string> &surfaces,
                               Provenance provenance = {});

  const std::string &id() const { return id_; }
  const std::string &text() const { return text_; }
  const std::vector<Token> &tokens() const { return tokens_; }
  const Provenance &provenance() const { return provenance_; }
  size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }
  const Token &operator[](size_t i) const { return tokens_[i]; }

  std::vector<std::string> Surfaces() const;

  // Same tokens under a different id.
  Sentence WithId(std::string id) const;

 private:
  std::string id_;
  std::string text_;
  std::vector<Token> tokens_;
  Provenance provenance_;
};

// Splits an abstract into sentence byte ranges. A boundary is a .!? followed
// by whitespace and an uppercase letter, unless the word carrying the period
// is a known abbreviation ("Fig.", "et al.", "e.g.", single initials).
std::vector<std::pair<size_t, size_t>> SegmentSentenceRanges(
    std::string_view text);
std::vector<std::string> SegmentSentences(std::string_view text);

// Uppercases the first letter of the first word token; placeholders and
// punctuation are left alone.
std::vector<Token> CapitalizeFirst(std::vector<Token> tokens);

}  // namespace gramsplit

#endif  // GRAMSPLIT_TEXT_H_
