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

#include "gramsplit/gram.h"

#include "gramsplit/error.h"

namespace gramsplit {

int GramValue(int unused, int dis) {
  if (dis >= 10 || dis < 0 || unused < 0)
    throw EncodingAssumptionViolated(unused, dis);
  return 10 * unused + dis;
}

int GramValue(const CostVector &cost) { return GramValue(cost.unused, cost.dis); }

GramScore ScoreLinkages(const std::vector<Linkage> &linkages, int num_words) {
  GramScore score;
  if (linkages.empty()) {
    // Only reachable with a restricted null budget.
    score.unused = num_words;
    score.value = GramValue(num_words, 0);
    return score;
  }
  const Linkage &best = linkages.front();
  score.unused = best.cost.unused;
  score.dis = best.cost.dis;
  score.value = GramValue(best.cost);
  score.best_linkage = best;
  return score;
}

GramScore ScoreSentence(const Sentence &sentence, const Lexicon &lexicon,
                        const ParseOptions &options) {
  if (sentence.empty()) throw EmptyInput("cannot score an empty sentence");
  const std::vector<std::string> words = sentence.Surfaces();
  return ScoreLinkages(Parse(words, lexicon, options),
                       static_cast<int>(words.size()));
}

GateDecision GateSplit(int original_gram, std::span<const int> part_grams) {
  if (part_grams.empty()) throw EmptyInput("split has no parts");
  GateDecision decision;
  decision.original_gram = original_gram;
  decision.part_grams.assign(part_grams.begin(), part_grams.end());
  long long sum = 0;
  for (int g : part_grams) sum += g;
  decision.accepted = sum <= original_gram;
  return decision;
}

GateDecision GateSplit(const GramScore &original,
                       std::span<const GramScore> parts) {
  std::vector<int> grams;
  grams.reserve(parts.size());
  for (const GramScore &p : parts) grams.push_back(p.value);
  return GateSplit(original.value, grams);
}

}  // namespace gramsplit
