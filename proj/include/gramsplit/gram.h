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

#ifndef GRAMSPLIT_GRAM_H_
#define GRAMSPLIT_GRAM_H_

#include <optional>
#include <span>
#include <vector>

#include "gramsplit/lexicon.h"
#include "gramsplit/linkparser.h"
#include "gramsplit/text.h"

namespace gramsplit {

// 10 * UNUSED + DIS. Throws EncodingAssumptionViolated when DIS >= 10,
// where the scalar would no longer order like (UNUSED, DIS).
int GramValue(int unused, int dis);
int GramValue(const CostVector &cost);

struct GramScore {
  int value = 0;
  int unused = 0;
  int dis = 0;
  std::optional<Linkage> best_linkage;
};

// Scores the best linkage of the sentence. Throws EmptyInput on an empty
// sentence.
GramScore ScoreSentence(const Sentence &sentence, const Lexicon &lexicon,
                        const ParseOptions &options = {});

// Score of an already parsed sentence; linkages as returned by Parse.
GramScore ScoreLinkages(const std::vector<Linkage> &linkages, int num_words);

struct GateDecision {
  bool accepted = false;
  int original_gram = 0;
  std::vector<int> part_grams;
};

// Accepts a split when the parts together score no worse than the
// original. Throws EmptyInput when parts is empty.
GateDecision GateSplit(const GramScore &original,
                       std::span<const GramScore> parts);
GateDecision GateSplit(int original_gram, std::span<const int> part_grams);

}  // namespace gramsplit

#endif  // GRAMSPLIT_GRAM_H_
