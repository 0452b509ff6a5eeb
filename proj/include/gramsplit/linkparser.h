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

#ifndef GRAMSPLIT_LINKPARSER_H_
#define GRAMSPLIT_LINKPARSER_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gramsplit/lexicon.h"

namespace gramsplit {

// A link between two word positions. Position 0 is LEFT-WALL; sentence
// words occupy positions 1..n.
struct Link {
  int left = 0;
  int right = 0;
  std::string label;

  bool operator==(const Link &) const = default;
  auto operator<=>(const Link &) const = default;
};

struct CostVector {
  int unused = 0;
  int dis = 0;
  int and_cost = 0;
  int len = 0;

  // "(UNUSED=1 DIS=0 AND=0 LEN=5)".
  std::string ToString() const;

  bool operator==(const CostVector &) const = default;
};

struct Linkage {
  // words[0] is "LEFT-WALL".
  std::vector<std::string> words;
  // Sorted by (left, right).
  std::vector<Link> links;
  // Linked positions, ascending; contains 0 whenever the wall links.
  std::vector<int> used;
  // Null-linked sentence positions, ascending.
  std::vector<int> skipped;
  std::map<int, Disjunct> chosen;
  CostVector cost;

  int sentence_size() const { return static_cast<int>(words.size()) - 1; }
};

struct ParseOptions {
  // Largest null count tried; negative means the sentence length.
  int max_null = -1;
  // Linkages kept at the winning null count; non-positive means unbounded.
  int max_linkages = 64;
};

// Finds the linkages of words at the smallest achievable null count, sorted
// by (DIS, LEN). Empty when no linkage exists within max_null. Throws
// EmptyInput when words is empty.
std::vector<Linkage> Parse(std::span<const std::string> words,
                           const Lexicon &lexicon,
                           const ParseOptions &options = {});

// Checks the structural invariants of a linkage: position bookkeeping,
// planarity, connectivity, connector satisfaction and cost. Returns an empty
// string when valid, otherwise a description of the first violation.
std::string ValidateLinkage(const Linkage &linkage);

// Link diagram over the word line, skipped words in brackets.
std::string DrawLinkage(const Linkage &linkage);

// Summary line, cost vector line and diagram for the first linkage.
std::string FormatParse(const std::vector<Linkage> &linkages);

}  // namespace gramsplit

#endif  // GRAMSPLIT_LINKPARSER_H_
