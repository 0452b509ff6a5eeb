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

#ifndef GRAMSPLIT_PREPROCESS_H_
#define GRAMSPLIT_PREPROCESS_H_

#include <istream>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include "gramsplit/text.h"

namespace gramsplit {

// A spurious-phrase pattern. Leading patterns are matched against the
// space-joined token surfaces at the start of the sentence and must end on a
// token boundary; bracketed patterns are searched in the space-joined
// contents of a "( ... )" or "[ ... ]" group, and a hit deletes the group.
struct SpuriousPattern {
  enum class Scope { kLeading, kBracketed };

  Scope scope = Scope::kLeading;
  std::string source;
  std::regex regex;

  static SpuriousPattern Regex(Scope scope, const std::string &pattern);
  static SpuriousPattern Literal(Scope scope, const std::string &text);
};

// Shared-affix coordination ellipsis rules.
//   kFusedSuffix:  "alpha and betaPIXs"     -> "alphaPIX and betaPIX"
//   kHyphenSuffix: "alpha - and beta - PIX" -> "alpha - PIX and beta - PIX"
enum class EllipsisRule { kFusedSuffix, kHyphenSuffix };

struct PreprocessConfig {
  std::vector<SpuriousPattern> spurious;
  std::vector<EllipsisRule> ellipsis;
  std::vector<std::string> conjunctions = {"and", "or"};
  // Expansions that hit this set always fire; others need a shared affix of
  // at least min_shared_affix characters.
  std::set<std::string> families;
  size_t min_shared_affix = 3;

  // Section indicators, figure/table/citation brackets, both ellipsis rules.
  static PreprocessConfig Defaults();

  // Empty pattern and rule lists: both operations are the identity.
  static PreprocessConfig Identity();
};

// Reads a preprocessing config. Keys:
//   leading = <regex>           leading_literal = <text>
//   bracketed = <regex>         bracketed_literal = <text>
//   ellipsis = fused-suffix | hyphen-suffix
//   conjunctions = and or       min_shared_affix = 3
//   defaults = yes|no           (start from Defaults(); default no)
PreprocessConfig LoadPreprocessConfig(std::istream &in);

Sentence RemoveSpuriousPhrases(const Sentence &sentence,
                               const PreprocessConfig &config);

Sentence ResolveCoordinationEllipsis(const Sentence &sentence,
                                     const PreprocessConfig &config);

}  // namespace gramsplit

#endif  // GRAMSPLIT_PREPROCESS_H_
