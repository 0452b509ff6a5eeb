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

#include "gramsplit/simplify.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "gramsplit/error.h"
#include "gramsplit/keyvalue.h"

namespace gramsplit {

namespace {

constexpr RuleCategory kAllCategories[] = {
    RuleCategory::kConjunctionPrefix,     RuleCategory::kConjunctionInfix,
    RuleCategory::kConjunctionIfThen,     RuleCategory::kRelativeNonrestrictive,
    RuleCategory::kRelativeRestrictive,   RuleCategory::kAppositionNonrestrictive,
    RuleCategory::kAppositionParenthetical, RuleCategory::kLeadPhrase,
};

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::string> SplitWords(const std::string &phrase) {
  std::istringstream in(phrase);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(Lower(w));
  return out;
}

bool IsTerminal(const Token &t) {
  return t.surface == "." || t.surface == "?" || t.surface == "!";
}

size_t BodyEnd(const std::vector<Token> &t) {
  return !t.empty() && IsTerminal(t.back()) ? t.size() - 1 : t.size();
}

// Token count of the longest phrase in `phrases` starting at token i.
size_t PhraseAt(const std::vector<Token> &t, size_t i, size_t end,
                const std::vector<std::string> &phrases) {
  size_t best = 0;
  for (const std::string &p : phrases) {
    std::vector<std::string> words = SplitWords(p);
    if (words.empty() || i + words.size() > end) continue;
    bool ok = true;
    for (size_t k = 0; k < words.size() && ok; ++k)
      ok = Lower(t[i + k].surface) == words[k];
    if (ok) best = std::max(best, words.size());
  }
  return best;
}

Token MakeToken(const std::string &surface) {
  return Token{surface, {}, ClassifySurface(surface)};
}

// Trims stray edge commas, collapses doubled commas, ends with a period and
// capitalizes.
Sentence MakePart(const std::string &id, std::vector<Token> tokens) {
  auto is_comma = [](const Token &t) { return t.surface == ","; };
  while (!tokens.empty() && (is_comma(tokens.back()) || IsTerminal(tokens.back())))
    tokens.pop_back();
  while (!tokens.empty() && is_comma(tokens.front())) tokens.erase(tokens.begin());
  std::vector<Token> cleaned;
  for (Token &t : tokens) {
    if (is_comma(t) && !cleaned.empty() && is_comma(cleaned.back())) continue;
    cleaned.push_back(std::move(t));
  }
  if (cleaned.empty()) return Sentence();
  cleaned.push_back(MakeToken("."));
  return Sentence::FromTokens(id, CapitalizeFirst(std::move(cleaned)));
}

std::vector<Token> Slice(const std::vector<Token> &t, size_t begin, size_t end) {
  if (begin >= end) return {};
  return std::vector<Token>(t.begin() + begin, t.begin() + end);
}

void Append(std::vector<Token> &dst, const std::vector<Token> &src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

std::string_view LabelType(std::string_view label) {
  size_t i = 0;
  while (i < label.size() && label[i] >= 'A' && label[i] <= 'Z') ++i;
  return label.substr(0, i);
}

bool LooksPlural(const std::string &noun) {
  if (noun.size() < 3 || noun.back() != 's') return false;
  std::string_view tail = std::string_view(noun).substr(noun.size() - 2);
  return tail != "ss" && tail != "is" && tail != "us";
}

// Positions reachable from `root` without crossing `anchor`. Empty when the
// anchor is not the only connection between the clause and the rest.
std::optional<std::pair<int, int>> ClauseHull(const Linkage &linkage,
                                              const Link &anchor, int root) {
  std::map<int, std::vector<int>> adj;
  for (const Link &l : linkage.links) {
    if (l == anchor) continue;
    adj[l.left].push_back(l.right);
    adj[l.right].push_back(l.left);
  }
  std::set<int> seen = {root};
  std::vector<int> stack = {root};
  while (!stack.empty()) {
    int p = stack.back();
    stack.pop_back();
    for (int q : adj[p]) {
      if (seen.insert(q).second) stack.push_back(q);
    }
  }
  const int other = anchor.left == root ? anchor.right : anchor.left;
  if (seen.contains(other)) return std::nullopt;
  const int lo = *seen.begin();
  const int hi = *seen.rbegin();
  const std::set<int> used(linkage.used.begin(), linkage.used.end());
  for (int p = lo; p <= hi; ++p) {
    if (used.contains(p) && !seen.contains(p)) return std::nullopt;
  }
  return std::make_pair(lo, hi);
}

bool IsSkipped(const Linkage &linkage, int pos) {
  return std::binary_search(linkage.skipped.begin(), linkage.skipped.end(), pos);
}

// The anchor's left word plus the modifiers attached to its left.
ReferringSpan SpanFor(const Linkage &linkage, const Link &anchor) {
  static const std::set<std::string_view> kModifiers = {"D", "A", "AN", "EA"};
  int lo = anchor.left;
  std::vector<int> stack = {anchor.left};
  while (!stack.empty()) {
    int p = stack.back();
    stack.pop_back();
    for (const Link &m : linkage.links) {
      if (m.right == p && kModifiers.contains(LabelType(m.label))) {
        lo = std::min(lo, m.left);
        stack.push_back(m.left);
      }
    }
  }
  if (lo == 0) lo = anchor.left;
  return ReferringSpan{static_cast<size_t>(lo - 1),
                       static_cast<size_t>(anchor.left),
                       static_cast<size_t>(anchor.left - 1)};
}

class CandidateBuilder {
 public:
  CandidateBuilder(const Sentence &sentence, const Linkage *linkage,
                   const RuleConfig &config, const PosLexicon &pos)
      : s_(sentence),
        t_(sentence.tokens()),
        end_(BodyEnd(sentence.tokens())),
        linkage_(linkage),
        config_(config),
        pos_(pos) {}

  std::optional<SplitCandidate> Apply(const RewriteRule &rule) {
    std::optional<SplitCandidate> c;
    switch (rule.category) {
      case RuleCategory::kConjunctionPrefix: c = Prefix(); break;
      case RuleCategory::kConjunctionInfix: c = Infix(); break;
      case RuleCategory::kConjunctionIfThen: c = IfThen(); break;
      case RuleCategory::kRelativeNonrestrictive: c = Relative(true); break;
      case RuleCategory::kRelativeRestrictive: c = Relative(false); break;
      case RuleCategory::kAppositionNonrestrictive: c = Apposition(","); break;
      case RuleCategory::kAppositionParenthetical: c = Apposition("("); break;
      case RuleCategory::kLeadPhrase: break;
    }
    if (!c) return std::nullopt;
    c->rule_id = rule.id;
    for (const Sentence &p : c->parts) {
      if (p.size() < 2 || p.size() >= s_.size()) return std::nullopt;
    }
    return c;
  }

 private:
  std::string PartId(int k) const { return s_.id() + "." + std::to_string(k); }

  SplitCandidate Two(std::vector<Token> a, std::vector<Token> b) const {
    SplitCandidate c;
    c.parts.push_back(MakePart(PartId(1), std::move(a)));
    c.parts.push_back(MakePart(PartId(2), std::move(b)));
    return c;
  }

  std::optional<SplitCandidate> Prefix() const {
    const size_t len = PhraseAt(t_, 0, end_, config_.prefix_subordinators);
    if (len == 0) return std::nullopt;
    size_t comma = len;
    while (comma < end_ && t_[comma].surface != ",") ++comma;
    if (comma == len || comma + 2 > end_) return std::nullopt;
    bool has_verb = false;
    for (size_t i = len; i < comma; ++i)
      has_verb |= pos_.Tag(t_[i]) == PosTag::kVerb;
    if (!has_verb) return std::nullopt;
    return Two(Slice(t_, len, comma), Slice(t_, comma + 1, end_));
  }

  std::optional<SplitCandidate> Infix() const {
    for (size_t i = 1; i < end_; ++i) {
      const size_t len = PhraseAt(t_, i, end_, config_.infix_subordinators);
      if (len == 0) continue;
      std::vector<Token> y = Slice(t_, 0, i);
      std::vector<Token> x = Slice(t_, i + len, end_);
      if (y.size() < 2 || x.size() < 2) return std::nullopt;
      return Two(std::move(y), std::move(x));
    }
    return std::nullopt;
  }

  std::optional<SplitCandidate> IfThen() const {
    if (end_ == 0 || Lower(t_[0].surface) != Lower(config_.if_word))
      return std::nullopt;
    size_t comma = 1;
    while (comma < end_ && t_[comma].surface != ",") ++comma;
    if (comma == 1 || comma >= end_) return std::nullopt;
    size_t y = comma + 1;
    if (y < end_ && Lower(t_[y].surface) == Lower(config_.then_word)) ++y;
    if (y >= end_) return std::nullopt;
    std::vector<Token> a = {MakeToken(config_.if_template)};
    Append(a, Slice(t_, 1, comma));
    std::vector<Token> b = {MakeToken(config_.then_template)};
    std::vector<Token> rest = Slice(t_, y, end_);
    if (rest[0].is_word() && rest[0].surface.size() > 1 &&
        std::isupper(static_cast<unsigned char>(rest[0].surface[0])) &&
        std::islower(static_cast<unsigned char>(rest[0].surface[1]))) {
      rest[0].surface[0] = static_cast<char>(
          std::tolower(static_cast<unsigned char>(rest[0].surface[0])));
    }
    Append(b, rest);
    return Two(std::move(a), std::move(b));
  }

  std::vector<Token> ReferringTokens(const Link &anchor) const {
    ReferringSpan span = SpanFor(*linkage_, anchor);
    return Slice(t_, span.begin, span.end);
  }

  std::optional<SplitCandidate> Relative(bool nonrestrictive) const {
    if (linkage_ == nullptr) return std::nullopt;
    for (const Link &l : linkage_->links) {
      if (LabelType(l.label) != config_.relative_label) continue;
      const size_t pi = static_cast<size_t>(l.right - 1);
      const std::string pronoun = Lower(t_[pi].surface);
      if (std::find(config_.relative_pronouns.begin(),
                    config_.relative_pronouns.end(),
                    pronoun) == config_.relative_pronouns.end())
        continue;
      const bool punct_before =
          pi > 0 && (t_[pi - 1].surface == "," || t_[pi - 1].surface == "(");
      if (punct_before != nonrestrictive) continue;
      if (nonrestrictive && pronoun == "that") continue;
      auto hull = ClauseHull(*linkage_, l, l.right);
      if (!hull) continue;
      size_t b = hull->first - 1;
      size_t e = hull->second;
      if (nonrestrictive) {
        const std::string open = t_[pi - 1].surface;
        if (b == pi && IsSkipped(*linkage_, static_cast<int>(pi))) b = pi - 1;
        if (b != pi - 1) continue;
        const std::string close = open == "(" ? ")" : ",";
        if (e < end_ && t_[e].surface == close &&
            IsSkipped(*linkage_, static_cast<int>(e + 1)))
          ++e;
        if (open == "(" && (e == 0 || t_[e - 1].surface != ")")) continue;
      } else if (b != pi) {
        continue;
      }
      if (e > end_) continue;
      std::vector<Token> content = Slice(t_, pi + 1, e);
      if (!content.empty() &&
          (content.back().surface == "," || content.back().surface == ")"))
        content.pop_back();
      if (content.empty()) continue;

      std::vector<Token> clause = ReferringTokens(l);
      Append(clause, content);
      std::vector<Token> matrix = Slice(t_, 0, b);
      Append(matrix, Slice(t_, e, end_));

      SplitCandidate c = e >= end_ ? Two(std::move(matrix), std::move(clause))
                                   : Two(std::move(clause), std::move(matrix));
      c.referring_expression = Detokenize(ReferringTokens(l));
      return c;
    }
    return std::nullopt;
  }

  std::optional<SplitCandidate> Apposition(const std::string &open) const {
    if (linkage_ == nullptr) return std::nullopt;
    const std::string close = open == "(" ? ")" : ",";
    for (const Link &l : linkage_->links) {
      if (LabelType(l.label) != config_.appositive_label) continue;
      const size_t ci = static_cast<size_t>(l.right - 1);
      if (t_[ci].surface != open) continue;
      if (ci + 1 < end_ &&
          std::find(config_.relative_pronouns.begin(),
                    config_.relative_pronouns.end(),
                    Lower(t_[ci + 1].surface)) != config_.relative_pronouns.end())
        continue;
      auto hull = ClauseHull(*linkage_, l, l.right);
      if (!hull) continue;
      const size_t b = hull->first - 1;
      const size_t e = hull->second;
      if (b != ci || e > end_ || e < b + 3 || t_[e - 1].surface != close)
        continue;
      std::vector<Token> refexp = ReferringTokens(l);
      ReferringSpan span = SpanFor(*linkage_, l);
      std::vector<Token> second = refexp;
      second.push_back(
          MakeToken(LooksPlural(t_[span.head].surface) ? "are" : "is"));
      Append(second, Slice(t_, b + 1, e - 1));
      std::vector<Token> matrix = Slice(t_, 0, b);
      Append(matrix, Slice(t_, e, end_));
      SplitCandidate c = Two(std::move(matrix), std::move(second));
      c.referring_expression = Detokenize(refexp);
      return c;
    }
    return std::nullopt;
  }

  const Sentence &s_;
  const std::vector<Token> &t_;
  size_t end_;
  const Linkage *linkage_;
  const RuleConfig &config_;
  const PosLexicon &pos_;

};

void Simplify(const Sentence &sentence, const Lexicon &lexicon,
              const RuleConfig &config, const PosLexicon &pos, int depth,
              int level, SimplificationResult &result) {
  const Sentence s =
      config.strip_leading ? StripLeadingPhrase(sentence, config) : sentence;
  if (depth <= 0) {
    result.outputs.push_back(s);
    return;
  }
  const std::vector<std::string> words = s.Surfaces();
  const std::vector<Linkage> linkages = Parse(words, lexicon);
  GramScore original;
  try {
    original = ScoreLinkages(linkages, static_cast<int>(words.size()));
  } catch (const EncodingAssumptionViolated &) {
    result.outputs.push_back(s);
    return;
  }
  const Linkage *best = linkages.empty() ? nullptr : &linkages.front();
  for (SplitCandidate &c : GenerateCandidates(s, best, config, pos)) {
    GateDecision decision;
    try {
      std::vector<GramScore> parts;
      for (const Sentence &p : c.parts)
        parts.push_back(ScoreSentence(p, lexicon));
      decision = GateSplit(original, parts);
    } catch (const EncodingAssumptionViolated &) {
      decision.accepted = false;
      decision.original_gram = original.value;
    }
    result.trace.push_back(TraceEntry{c.rule_id, decision, level});
    if (decision.accepted) {
      for (const Sentence &p : c.parts)
        Simplify(p, lexicon, config, pos, depth - 1, level + 1, result);
      return;
    }
  }
  result.outputs.push_back(s);
}

}  // namespace

const char *RuleCategoryName(RuleCategory category) {
  switch (category) {
    case RuleCategory::kConjunctionPrefix: return "conjunction_prefix_subordination";
    case RuleCategory::kConjunctionInfix: return "conjunction_infix_subordination";
    case RuleCategory::kConjunctionIfThen: return "conjunction_if_then";
    case RuleCategory::kRelativeNonrestrictive: return "relative_nonrestrictive";
    case RuleCategory::kRelativeRestrictive: return "relative_restrictive";
    case RuleCategory::kAppositionNonrestrictive: return "apposition_nonrestrictive";
    case RuleCategory::kAppositionParenthetical: return "apposition_parenthetical";
    case RuleCategory::kLeadPhrase: return "lead_phrase";
  }
  return "";
}

std::optional<RuleCategory> RuleCategoryFromName(std::string_view name) {
  for (RuleCategory c : kAllCategories) {
    if (name == RuleCategoryName(c)) return c;
  }
  return std::nullopt;
}

RuleConfig RuleConfig::Defaults() {
  RuleConfig config;
  for (RuleCategory c :
       {RuleCategory::kRelativeNonrestrictive, RuleCategory::kRelativeRestrictive,
        RuleCategory::kConjunctionPrefix, RuleCategory::kConjunctionInfix,
        RuleCategory::kConjunctionIfThen, RuleCategory::kAppositionNonrestrictive,
        RuleCategory::kAppositionParenthetical}) {
    config.rules.push_back(RewriteRule{RuleCategoryName(c), c});
  }
  config.prefix_subordinators = {"because", "although", "though", "while",
                                 "when",    "since",    "as",     "unlike",
                                 "whereas", "thus"};
  config.infix_subordinators = {"even though", "though", "although", "whereas",
                                "because",     "while",  "since"};
  config.reporting_verbs = {
      "suggest",     "suggests",     "suggested",  "indicate",  "indicates",
      "indicated",   "show",         "shows",      "showed",    "shown",
      "demonstrate", "demonstrates", "demonstrated", "reveal",  "reveals",
      "revealed",    "report",       "reports",    "reported",  "propose",
      "proposed",    "conclude",     "concluded",  "confirm",   "confirmed",
      "established", "found"};
  return config;
}

RuleConfig LoadRuleConfig(std::istream &in) {
  RuleConfig config = RuleConfig::Defaults();
  for (const KeyValue &kv : ReadKeyValues(in)) {
    auto list = [&] { return SplitList(kv.value, kv.line); };
    auto yes_no = [&] {
      if (kv.value != "yes" && kv.value != "no")
        throw ParseError(kv.line, kv.key + " must be yes or no");
      return kv.value == "yes";
    };
    if (kv.key == "rules") {
      config.rules.clear();
      config.strip_leading = false;
      for (const std::string &id : list()) {
        std::optional<RuleCategory> c = RuleCategoryFromName(id);
        if (!c) throw ParseError(kv.line, "unknown rule " + id);
        if (*c == RuleCategory::kLeadPhrase) {
          config.strip_leading = true;
        } else {
          config.rules.push_back(RewriteRule{id, *c});
        }
      }
    } else if (kv.key == "prefix_subordinators") {
      config.prefix_subordinators = list();
    } else if (kv.key == "infix_subordinators") {
      config.infix_subordinators = list();
    } else if (kv.key == "relative_pronouns") {
      config.relative_pronouns = list();
    } else if (kv.key == "reporting_verbs") {
      config.reporting_verbs = list();
    } else if (kv.key == "if_word") {
      config.if_word = kv.value;
    } else if (kv.key == "then_word") {
      config.then_word = kv.value;
    } else if (kv.key == "if_template") {
      config.if_template = kv.value;
    } else if (kv.key == "then_template") {
      config.then_template = kv.value;
    } else if (kv.key == "relative_label") {
      config.relative_label = kv.value;
    } else if (kv.key == "appositive_label") {
      config.appositive_label = kv.value;
    } else if (kv.key == "strip_leading") {
      config.strip_leading = yes_no();
    } else if (kv.key == "max_depth") {
      try {
        config.max_depth = std::stoi(kv.value);
      } catch (const std::exception &) {
        throw ParseError(kv.line, "max_depth must be an integer");
      }
      if (config.max_depth < 0) throw ParseError(kv.line, "negative max_depth");
    } else {
      throw ParseError(kv.line, "unknown key " + kv.key);
    }
  }
  return config;
}

ReferringSpan FindReferringSpan(const Linkage &linkage, ClauseKind kind,
                                const RuleConfig &config) {
  const std::string &label = kind == ClauseKind::kRelative
                                 ? config.relative_label
                                 : config.appositive_label;
  for (const Link &l : linkage.links) {
    if (LabelType(l.label) == label && l.left > 0)
      return SpanFor(linkage, l);
  }
  throw NoAntecedent("no " + label + " link");
}

std::string FindReferringExpression(const Linkage &linkage, ClauseKind kind,
                                    const RuleConfig &config) {
  ReferringSpan span = FindReferringSpan(linkage, kind, config);
  std::vector<std::string> words(linkage.words.begin() + span.begin + 1,
                                 linkage.words.begin() + span.end + 1);
  return Detokenize(words);
}

std::vector<SplitCandidate> GenerateCandidates(const Sentence &sentence,
                                               const Linkage *linkage,
                                               const RuleConfig &config,
                                               const PosLexicon &pos) {
  std::vector<SplitCandidate> out;
  if (sentence.empty()) return out;
  if (linkage != nullptr && linkage->sentence_size() != static_cast<int>(sentence.size()))
    linkage = nullptr;
  CandidateBuilder builder(sentence, linkage, config, pos);
  for (const RewriteRule &rule : config.rules) {
    if (auto c = builder.Apply(rule)) out.push_back(std::move(*c));
  }
  return out;
}

Sentence StripLeadingPhrase(const Sentence &sentence, const RuleConfig &config) {
  const std::vector<Token> &t = sentence.tokens();
  size_t cut = 0;
  const size_t limit = std::min(config.max_frame_tokens, t.size());
  for (size_t k = 1; k < limit + 1 && k < t.size(); ++k) {
    if (!t[k].is_word()) break;
    if (Lower(t[k].surface) != "that") continue;
    for (size_t i = 0; i < k; ++i) {
      const std::string w = Lower(t[i].surface);
      if (std::find(config.reporting_verbs.begin(), config.reporting_verbs.end(),
                    w) != config.reporting_verbs.end()) {
        cut = k + 1;
        break;
      }
    }
    break;
  }
  if (cut == 0 && t.size() > 2 && Lower(t[0].surface) == "as" && t[1].is_word()) {
    const std::string w = Lower(t[1].surface);
    const bool participle =
        (w.size() > 3 && (w.ends_with("ed") || w.ends_with("en"))) ||
        std::find(config.reporting_verbs.begin(), config.reporting_verbs.end(),
                  w) != config.reporting_verbs.end();
    for (size_t c = 2; participle && c <= 4 && c < t.size(); ++c) {
      if (t[c].surface == ",") {
        cut = c + 1;
        break;
      }
    }
  }
  if (cut == 0 || t.size() - cut < 3) return sentence;
  std::vector<Token> rest(t.begin() + cut, t.end());
  return Sentence::FromTokens(sentence.id(), CapitalizeFirst(std::move(rest)),
                              sentence.provenance());
}

SimplificationResult SimplifySentence(const Sentence &sentence,
                                      const Lexicon &lexicon,
                                      const RuleConfig &config,
                                      const PosLexicon &pos) {
  return SimplifySentence(sentence, lexicon, config, pos, config.max_depth);
}

SimplificationResult SimplifySentence(const Sentence &sentence,
                                      const Lexicon &lexicon,
                                      const RuleConfig &config,
                                      const PosLexicon &pos, int max_depth) {
  if (sentence.empty()) throw EmptyInput("cannot simplify an empty sentence");
  SimplificationResult result;
  result.original = sentence;
  Simplify(sentence, lexicon, config, pos, max_depth, 0, result);
  return result;
}

}  // namespace gramsplit
