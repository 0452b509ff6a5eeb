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

#ifndef GRAMSPLIT_SIMPLIFY_H_
#define GRAMSPLIT_SIMPLIFY_H_

#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gramsplit/entity.h"
#include "gramsplit/gram.h"
#include "gramsplit/lexicon.h"
#include "gramsplit/linkparser.h"
#include "gramsplit/text.h"

namespace gramsplit {

enum class RuleCategory {
  kConjunctionPrefix,
  kConjunctionInfix,
  kConjunctionIfThen,
  kRelativeNonrestrictive,
  kRelativeRestrictive,
  kAppositionNonrestrictive,
  kAppositionParenthetical,
  kLeadPhrase,
};

// Stable rule identifiers, e.g. "conjunction_infix_subordination".
const char *RuleCategoryName(RuleCategory category);
std::optional<RuleCategory> RuleCategoryFromName(std::string_view name);

struct RewriteRule {
  std::string id;
  RuleCategory category;
};

// Which split rules run, in which order, and the word lists they use.
struct RuleConfig {
  std::vector<RewriteRule> rules;

  // "Sub X , Y ." openers. Matched case-insensitively.
  std::vector<std::string> prefix_subordinators;
  // "Y , Sub X ." connectives; entries may span several tokens.
  std::vector<std::string> infix_subordinators;
  std::vector<std::string> relative_pronouns = {"which", "who", "that"};
  std::string if_word = "if";
  std::string then_word = "then";
  std::string if_template = "Suppose";
  std::string then_template = "Then";

  // Link labels that tie a clause to its antecedent.
  std::string relative_label = "MX";
  std::string appositive_label = "R";

  // Leading-phrase removal.
  bool strip_leading = true;
  std::vector<std::string> reporting_verbs;
  size_t max_frame_tokens = 5;

  int max_depth = 3;

  // The seven split rules with infix subordination ahead of apposition.
  static RuleConfig Defaults();
};

// Reads a rule config on top of Defaults(). Keys:
//   rules = <rule ids in order>      (also enables/disables rules)
//   prefix_subordinators = ...       infix_subordinators = ...
//   relative_pronouns = ...          reporting_verbs = ...
//   if_word, then_word, if_template, then_template
//   relative_label, appositive_label
//   strip_leading = yes|no           max_depth = <n>
// Throws ParseError on unknown keys, rule ids or malformed values.
RuleConfig LoadRuleConfig(std::istream &in);

enum class ClauseKind { kRelative, kAppositive };

// Token range [begin, end) of a referring expression and the token index of
// its head noun.
struct ReferringSpan {
  size_t begin = 0;
  size_t end = 0;
  size_t head = 0;
};

// The antecedent of the first clause link of the given kind: the noun at the
// link's left end together with the determiners, adjectives, noun modifiers
// and adjective modifiers attached to its left. Throws NoAntecedent when the
// linkage has no such link.
ReferringSpan FindReferringSpan(const Linkage &linkage, ClauseKind kind,
                                const RuleConfig &config);
std::string FindReferringExpression(const Linkage &linkage, ClauseKind kind,
                                    const RuleConfig &config);

struct SplitCandidate {
  std::string rule_id;
  std::vector<Sentence> parts;
  std::optional<std::string> referring_expression;
};

// Applies every enabled rule once, in rule order. linkage may be null, in
// which case only the purely lexical conjunction rules can fire. Candidates
// whose parts are not all shorter than the sentence are dropped.
std::vector<SplitCandidate> GenerateCandidates(const Sentence &sentence,
                                               const Linkage *linkage,
                                               const RuleConfig &config,
                                               const PosLexicon &pos);

// Removes a sentence-initial reporting frame ("These results suggest that",
// "It has been shown that") or participial frame ("As reported previously
// ,"), re-capitalizing what remains. Unchanged when no frame matches or
// fewer than three tokens would remain.
Sentence StripLeadingPhrase(const Sentence &sentence, const RuleConfig &config);

struct TraceEntry {
  std::string rule_id;
  GateDecision decision;
  int depth = 0;
};

struct SimplificationResult {
  Sentence original;
  std::vector<Sentence> outputs;
  std::vector<TraceEntry> trace;
  PlaceholderTable placeholders;
};

// Strips a leading frame, parses, and tries the candidates in rule order;
// the first one the GRAM gate accepts is split and its parts are simplified
// again with one level less of depth. Candidates whose scoring overflows
// the GRAM encoding are rejected. Throws EmptyInput on an empty sentence.
SimplificationResult SimplifySentence(const Sentence &sentence,
                                      const Lexicon &lexicon,
                                      const RuleConfig &config,
                                      const PosLexicon &pos);
SimplificationResult SimplifySentence(const Sentence &sentence,
                                      const Lexicon &lexicon,
                                      const RuleConfig &config,
                                      const PosLexicon &pos, int max_depth);

}  // namespace gramsplit

#endif  // GRAMSPLIT_SIMPLIFY_H_
