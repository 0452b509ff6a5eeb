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

#include "gramsplit/text.h"

#include <algorithm>
#include <cctype>

#include "gramsplit/error.h"

namespace gramsplit {

namespace {

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)); }

bool IsOpening(char c) { return c == '(' || c == '[' || c == '{' || c == '"'; }

bool IsClosing(char c) {
  return c == ',' || c == ';' || c == ':' || c == ')' || c == ']' ||
         c == '}' || c == '"';
}

bool IsTerminal(char c) { return c == '.' || c == '?' || c == '!'; }

bool AttachesLeft(std::string_view s) {
  return s == "." || s == "," || s == ";" || s == ":" || s == "?" ||
         s == "!" || s == ")" || s == "]" || s == "}";
}

bool AttachesRight(std::string_view s) {
  return s == "(" || s == "[" || s == "{";
}

const char *const kAbbreviations[] = {
    "Fig.",  "Figs.", "fig.",  "figs.", "al.",  "e.g.", "i.e.", "vs.",
    "cf.",   "Dr.",   "Mr.",   "Ms.",   "No.",  "no.",  "approx.", "ca.",
    "resp.", "Ref.",  "ref.",  "Refs.", "Eq.",  "St.",  "Tab.", "Suppl.",
};

bool IsAbbreviation(std::string_view word) {
  for (const char *a : kAbbreviations) {
    if (word == a) return true;
  }
  // Initials such as "J." or "E. coli".
  return word.size() == 2 && std::isupper(static_cast<unsigned char>(word[0]));
}

}  // namespace

bool IsPlaceholderSurface(std::string_view surface) {
  if (surface.size() < 5 || surface.substr(0, 4) != "GENE") return false;
  return std::all_of(surface.begin() + 4, surface.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

TokenKind ClassifySurface(std::string_view surface) {
  if (IsPlaceholderSurface(surface)) return TokenKind::kPlaceholder;
  bool any_alnum = std::any_of(surface.begin(), surface.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) ||
           static_cast<unsigned char>(c) >= 0x80;
  });
  return any_alnum ? TokenKind::kWord : TokenKind::kPunctuation;
}

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<std::pair<size_t, size_t>> chunks;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpace(text[i])) ++i;
    if (i >= text.size()) break;
    size_t start = i;
    while (i < text.size() && !IsSpace(text[i])) ++i;
    chunks.emplace_back(start, i);
  }
  if (chunks.empty()) throw EmptyInput("text has no tokens");

  std::vector<Token> tokens;
  auto emit = [&](size_t s, size_t e) {
    std::string surface(text.substr(s, e - s));
    TokenKind kind = ClassifySurface(surface);
    tokens.push_back({std::move(surface), {s, e}, kind});
  };
  for (size_t c = 0; c < chunks.size(); ++c) {
    auto [s, e] = chunks[c];
    bool last_chunk = c + 1 == chunks.size();
    while (e - s > 1 && IsOpening(text[s])) {
      emit(s, s + 1);
      ++s;
    }
    std::vector<std::pair<size_t, size_t>> tail;
    while (e - s > 1) {
      char ch = text[e - 1];
      if (IsClosing(ch) || (last_chunk && tail.empty() && IsTerminal(ch)) ||
          (last_chunk && IsTerminal(ch) &&
           text.substr(tail.back().first, 1) == ")")) {
        tail.emplace_back(e - 1, e);
        --e;
      } else {
        break;
      }
    }
    emit(s, e);
    for (auto it = tail.rbegin(); it != tail.rend(); ++it) {
      emit(it->first, it->second);
    }
  }
  return tokens;
}

std::string Detokenize(std::span<const std::string> surfaces) {
  if (surfaces.empty()) throw EmptyInput("no tokens to detokenize");
  std::string out;
  bool glue = true;
  for (const std::string &s : surfaces) {
    if (!glue && !AttachesLeft(s)) out += ' ';
    out += s;
    glue = AttachesRight(s);
  }
  return out;
}

std::string Detokenize(std::span<const Token> tokens) {
  std::vector<std::string> surfaces;
  surfaces.reserve(tokens.size());
  for (const Token &t : tokens) surfaces.push_back(t.surface);
  return Detokenize(std::span<const std::string>(surfaces));
}

std::string NormalizeWhitespace(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char c : text) {
    if (IsSpace(c)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out += ' ';
      pending_space = false;
      out += c;
    }
  }
  return out;
}

Sentence Sentence::FromText(std::string id, std::string_view text,
                            Provenance provenance) {
  Sentence s;
  s.id_ = std::move(id);
  s.text_ = std::string(text);
  s.tokens_ = Tokenize(s.text_);
  s.provenance_ = std::move(provenance);
  return s;
}

Sentence Sentence::FromTokens(std::string id, std::vector<Token> tokens,
                              Provenance provenance) {
  Sentence s;
  s.id_ = std::move(id);
  s.provenance_ = std::move(provenance);
  if (tokens.empty()) return s;
  bool glue = true;
  for (Token &t : tokens) {
    if (!glue && !AttachesLeft(t.surface)) s.text_ += ' ';
    t.span.start = s.text_.size();
    s.text_ += t.surface;
    t.span.end = s.text_.size();
    glue = AttachesRight(t.surface);
  }
  s.tokens_ = std::move(tokens);
  return s;
}

Sentence Sentence::FromSurfaces(std::string id,
                                const std::vector<std::string> &surfaces,
                                Provenance provenance) {
  std::vector<Token> tokens;
  tokens.reserve(surfaces.size());
  for (const std::string &s : surfaces) {
    tokens.push_back({s, {}, ClassifySurface(s)});
  }
  return FromTokens(std::move(id), std::move(tokens), std::move(provenance));
}

std::vector<std::string> Sentence::Surfaces() const {
  std::vector<std::string> out;
  out.reserve(tokens_.size());
  for (const Token &t : tokens_) out.push_back(t.surface);
  return out;
}

Sentence Sentence::WithId(std::string id) const {
  Sentence s = *this;
  s.id_ = std::move(id);
  return s;
}

std::vector<std::pair<size_t, size_t>> SegmentSentenceRanges(
    std::string_view text) {
  std::vector<std::pair<size_t, size_t>> ranges;
  size_t start = 0;
  auto push = [&](size_t end) {
    while (start < end && IsSpace(text[start])) ++start;
    size_t e = end;
    while (e > start && IsSpace(text[e - 1])) --e;
    if (e > start) ranges.emplace_back(start, e);
  };
  for (size_t i = 0; i < text.size(); ++i) {
    if (!IsTerminal(text[i])) continue;
    size_t j = i + 1;
    if (j >= text.size() || !IsSpace(text[j])) continue;
    while (j < text.size() && IsSpace(text[j])) ++j;
    if (j >= text.size() || !std::isupper(static_cast<unsigned char>(text[j])))
      continue;
    size_t w = i;
    while (w > 0 && !IsSpace(text[w - 1])) --w;
    if (text[i] == '.' && IsAbbreviation(text.substr(w, i + 1 - w))) continue;
    push(i + 1);
    start = i + 1;
  }
  push(text.size());
  return ranges;
}

std::vector<std::string> SegmentSentences(std::string_view text) {
  std::vector<std::string> out;
  for (auto [s, e] : SegmentSentenceRanges(text)) {
    out.emplace_back(text.substr(s, e - s));
  }
  return out;
}

std::vector<Token> CapitalizeFirst(std::vector<Token> tokens) {
  for (Token &t : tokens) {
    if (t.is_punctuation()) continue;
    if (t.is_word() && !t.surface.empty() &&
        std::islower(static_cast<unsigned char>(t.surface[0]))) {
      t.surface[0] = static_cast<char>(
          std::toupper(static_cast<unsigned char>(t.surface[0])));
    }
    break;
  }
  return tokens;
}

}  // namespace gramsplit
