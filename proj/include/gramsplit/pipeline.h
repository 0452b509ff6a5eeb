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

#ifndef GRAMSPLIT_PIPELINE_H_
#define GRAMSPLIT_PIPELINE_H_

#include <string>
#include <string_view>
#include <vector>

#include "gramsplit/entity.h"
#include "gramsplit/lexicon.h"
#include "gramsplit/preprocess.h"
#include "gramsplit/simplify.h"
#include "gramsplit/text.h"

namespace gramsplit {

// Contents of a data file compiled into the library: "fixture.dict",
// "gazetteer.txt", "pos_lexicon.txt", "rules.conf" or "preprocess.conf".
// Empty for other names.
std::string_view DefaultData(std::string_view name);

// Everything the four-phase pipeline reads. Immutable once built and safe to
// share between threads.
struct Resources {
  Lexicon lexicon;
  Gazetteer gazetteer;
  PosLexicon pos;
  RuleConfig rules;
  PreprocessConfig preprocess;

  // Built from the compiled-in data files.
  static Resources Defaults();
};

// Runs preprocessing, gene substitution, noun-phrase head replacement and
// sentence simplification, in that order. Genes come from `recognizer` when
// given, otherwise from the gazetteer. Throws EmptyInput on blank input.
SimplificationResult SimplifyPipeline(const Sentence &sentence,
                                      const Resources &resources,
                                      const GeneRecognizer *recognizer = nullptr);
SimplificationResult SimplifyPipeline(std::string_view text,
                                      const Resources &resources,
                                      const GeneRecognizer *recognizer = nullptr);

// The sentence after the first three phases, with its placeholder table.
std::pair<Sentence, PlaceholderTable> PrepareSentence(
    const Sentence &sentence, const Resources &resources,
    const GeneRecognizer *recognizer = nullptr);

// Outputs with placeholders replaced by their original surfaces.
std::vector<std::string> RestoredOutputs(const SimplificationResult &result);

}  // namespace gramsplit

#endif  // GRAMSPLIT_PIPELINE_H_
