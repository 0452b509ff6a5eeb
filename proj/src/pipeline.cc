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

#include "gramsplit/pipeline.h"

#include <sstream>

#include "gramsplit/error.h"

namespace gramsplit {

namespace {

std::istringstream DataStream(std::string_view name) {
  return std::istringstream(std::string(DefaultData(name)));
}

}  // namespace

Resources Resources::Defaults() {
  Resources r;
  auto dict = DataStream("fixture.dict");
  r.lexicon = Lexicon::Load(dict);
  auto gazetteer = DataStream("gazetteer.txt");
  r.gazetteer = Gazetteer::Load(gazetteer);
  auto pos = DataStream("pos_lexicon.txt");
  r.pos = PosLexicon::Load(pos);
  auto rules = DataStream("rules.conf");
  r.rules = LoadRuleConfig(rules);
  auto preprocess = DataStream("preprocess.conf");
  r.preprocess = LoadPreprocessConfig(preprocess);
  return r;
}

std::pair<Sentence, PlaceholderTable> PrepareSentence(
    const Sentence &sentence, const Resources &resources,
    const GeneRecognizer *recognizer) {
  if (sentence.empty()) throw EmptyInput("empty sentence");
  Sentence s = RemoveSpuriousPhrases(sentence, resources.preprocess);
  s = ResolveCoordinationEllipsis(s, resources.preprocess);
  const std::vector<EntityMention> mentions =
      recognizer != nullptr ? recognizer->Recognize(s)
                            : RecognizeGenes(s, resources.gazetteer);
  auto [substituted, table] = SubstituteGenes(s, mentions);
  const std::vector<NounPhrase> phrases =
      ChunkNounPhrases(substituted, resources.pos);
  const std::vector<NounPhrase> chosen =
      SelectReplaceable(substituted, phrases, resources.pos);
  return {ReplaceNpHeads(substituted, chosen), std::move(table)};
}

SimplificationResult SimplifyPipeline(const Sentence &sentence,
                                      const Resources &resources,
                                      const GeneRecognizer *recognizer) {
  auto [prepared, table] = PrepareSentence(sentence, resources, recognizer);
  SimplificationResult result = SimplifySentence(
      prepared, resources.lexicon, resources.rules, resources.pos);
  result.original = sentence;
  result.placeholders = std::move(table);
  return result;
}

SimplificationResult SimplifyPipeline(std::string_view text,
                                      const Resources &resources,
                                      const GeneRecognizer *recognizer) {
  return SimplifyPipeline(Sentence::FromText("s0", text), resources, recognizer);
}

std::vector<std::string> RestoredOutputs(const SimplificationResult &result) {
  std::vector<std::string> out;
  out.reserve(result.outputs.size());
  for (const Sentence &s : result.outputs)
    out.push_back(RestoreGenes(s, result.placeholders, false).text());
  return out;
}

}  // namespace gramsplit
