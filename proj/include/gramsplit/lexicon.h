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

#ifndef GRAMSPLIT_LEXICON_H_
#define GRAMSPLIT_LEXICON_H_

#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gramsplit {

// '-' connectors point left, '+' connectors point right.
enum class Direction { kLeft, kRight };

// A connector such as "Ss*h+": an uppercase type, an optional subscript of
// lowercase letters and '*' wildcards, and a direction.
struct Connector {
  std::string label;
  Direction direction = Direction::kRight;

  // Parses "Ss*h+" / "MVa-". Throws Error on malformed text.
  static Connector Parse(std::string_view text);

  std::string_view type() const;
  std::string_view subscript() const;
  std::string ToString() const;

  bool operator==(const Connector &) const = default;
  auto operator<=>(const Connector &) const = default;
};

// True when a right-pointing connector on the left word can link with a
// left-pointing connector on the right word: equal types, and every
// subscript position equal, '*' on either side, or missing on either side.
bool Match(const Connector &left_word, const Connector &right_word);

// Label of the link formed by two matching connectors: the type plus the
// more specific character at each subscript position ("Ss*h" + "Ss" gives
// "Ss*h").
std::string LinkLabel(const Connector &left_word, const Connector &right_word);

// One way for a word to satisfy its linking requirements. Both lists are
// ordered innermost (nearest partner) first.
struct Disjunct {
  std::vector<Connector> left;
  std::vector<Connector> right;
  int cost = 0;

  bool empty() const { return left.empty() && right.empty(); }
  std::string ToString() const;

  bool operator==(const Disjunct &) const = default;
};

enum class UnknownWordPolicy { kNoDisjuncts, kGenericNoun };

// A link-grammar style dictionary.
//
// Format: statements "word1 word2 ...: EXPR;" where EXPR is built from
// connectors, "&" (also "and"), "or", "( )", optional "{ }", cost brackets
// "[ ]" (each layer adds 1 to the cost of the disjuncts inside) and macro
// references "<name>". "<name>: EXPR;" defines a macro; macros must be
// defined before use. '%' starts a comment. Words containing ':', ';' or
// whitespace are written in double quotes. For '-' connectors the leftmost
// in an expression links farthest away; for '+' connectors the leftmost
// links nearest, so "A- & B- & C+ & D+" reads in sentence order.
//
// Special entries: LEFT-WALL (the virtual word before the sentence),
// UNKNOWN-WORD (disjuncts for words not in the dictionary; its presence
// selects the generic-noun policy), and prefix entries ending in '*' such as
// "GENE*", which match any word with that prefix not otherwise listed.
class Lexicon {
 public:
  Lexicon() = default;

  // Throws ParseError with a line number on syntax errors and CostOverflow
  // when a disjunct's cost exceeds 9.
  static Lexicon Load(std::istream &in);

  // Disjuncts for word. A capitalized sentence-initial word falls back to
  // its lowercase form. Returns an empty list for unusable words.
  const std::vector<Disjunct> &Lookup(std::string_view word,
                                      bool sentence_initial) const;

  const std::vector<Disjunct> &wall() const { return wall_; }

  UnknownWordPolicy unknown_word_policy() const { return policy_; }
  void set_unknown_word_policy(UnknownWordPolicy policy) { policy_ = policy; }

  bool Contains(std::string_view word) const;
  size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, std::vector<Disjunct>, std::less<>> entries_;
  std::vector<std::pair<std::string, std::vector<Disjunct>>> prefixes_;
  std::vector<Disjunct> wall_;
  std::vector<Disjunct> unknown_;
  UnknownWordPolicy policy_ = UnknownWordPolicy::kNoDisjuncts;
};

}  // namespace gramsplit

#endif  // GRAMSPLIT_LEXICON_H_
