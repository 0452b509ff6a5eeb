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

#include "gramsplit/preprocess.h"

#include <algorithm>
#include <cctype>

#include "gramsplit/error.h"
#include "gramsplit/keyvalue.h"

namespace gramsplit {

namespace {

std::string EscapeRegex(const std::string &text) {
  static const std::string kSpecial = R"(\^$.|?*+()[]{})";
  std::string out;
  for (char c : text) {
    if (kSpecial.find(c) != std::string::npos) out += '\\';
    out += c;
  }
  return out;
}

bool IsLowerAlpha(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::islower(static_cast<unsigned char>(c));
  });
}

std::string Join(const std::vector<Token> &tokens, size_t begin, size_t end,
                 std::vector<size_t> *ends) {
  std::string out;
  for (size_t i = begin; i < end; ++i) {
    if (i > begin) out += ' ';
    out += tokens[i].surface;
    if (ends != nullptr) ends->push_back(out.size());
  }
  return out;
}

// Removes one leading spurious phrase; returns false when none matched.
bool StripLeading(std::vector<Token> &tokens,
                  const std::vector<SpuriousPattern> &patterns) {
  std::vector<size_t> ends;
  std::string joined = Join(tokens, 0, tokens.size(), &ends);
  for (const SpuriousPattern &p : patterns) {
    if (p.scope != SpuriousPattern::Scope::kLeading) continue;
    std::smatch m;
    if (!std::regex_search(joined, m, p.regex,
                           std::regex_constants::match_continuous))
      continue;
    size_t len = static_cast<size_t>(m.length(0));
    while (len > 0 && joined[len - 1] == ' ') --len;
    if (len == 0) continue;
    auto it = std::find(ends.begin(), ends.end(), len);
    if (it == ends.end()) continue;
    size_t count = static_cast<size_t>(it - ends.begin()) + 1;
    if (count >= tokens.size()) continue;
    tokens.erase(tokens.begin(), tokens.begin() + count);
    return true;
  }
  return false;
}

bool StripBracketed(std::vector<Token> &tokens,
                    const std::vector<SpuriousPattern> &patterns) {
  for (size_t open = 0; open < tokens.size(); ++open) {
    const std::string &o = tokens[open].surface;
    if (o != "(" && o != "[") continue;
    const std::string close_mark = o == "(" ? ")" : "]";
    size_t close = open + 1;
    while (close < tokens.size() && tokens[close].surface != close_mark &&
           tokens[close].surface != "(" && tokens[close].surface != "[")
      ++close;
    if (close >= tokens.size() || tokens[close].surface != close_mark) continue;
    std::string contents = Join(tokens, open + 1, close, nullptr);
    for (const SpuriousPattern &p : patterns) {
      if (p.scope != SpuriousPattern::Scope::kBracketed) continue;
      if (std::regex_search(contents, p.regex)) {
        tokens.erase(tokens.begin() + open, tokens.begin() + close + 1);
        return true;
      }
    }
  }
  return false;
}

bool IsConjunction(const PreprocessConfig &config, const std::string &word) {
  return std::find(config.conjunctions.begin(), config.conjunctions.end(),
                   word) != config.conjunctions.end();
}

bool ExpansionAllowed(const PreprocessConfig &config,
                      const std::string &expanded, const std::string &affix) {
  return config.families.count(expanded) > 0 ||
         affix.size() >= config.min_shared_affix;
}

bool ApplyFusedSuffix(std::vector<Token> &tokens,
                      const PreprocessConfig &config) {
  bool changed = false;
  for (size_t i = 0; i + 2 < tokens.size(); ++i) {
    const Token &a = tokens[i];
    const Token &b = tokens[i + 2];
    if (!a.is_word() || !b.is_word() || !IsLowerAlpha(a.surface)) continue;
    if (!IsConjunction(config, tokens[i + 1].surface)) continue;
    const std::string &bs = b.surface;
    size_t p = 0;
    while (p < bs.size() && std::islower(static_cast<unsigned char>(bs[p])))
      ++p;
    if (p == 0 || p >= bs.size() ||
        !std::isupper(static_cast<unsigned char>(bs[p])))
      continue;
    std::string affix = bs.substr(p);
    if (affix.size() >= 2 && affix.back() == 's') {
      unsigned char prev = static_cast<unsigned char>(affix[affix.size() - 2]);
      if (std::isupper(prev) || std::isdigit(prev)) affix.pop_back();
    }
    std::string expanded = a.surface + affix;
    if (!ExpansionAllowed(config, expanded, affix)) continue;
    tokens[i].surface = expanded;
    tokens[i + 2].surface = bs.substr(0, p) + affix;
    changed = true;
  }
  return changed;
}

bool ApplyHyphenSuffix(std::vector<Token> &tokens,
                       const PreprocessConfig &config) {
  bool changed = false;
  for (size_t i = 0; i + 5 < tokens.size(); ++i) {
    if (!tokens[i].is_word() || tokens[i + 1].surface != "-" ||
        !IsConjunction(config, tokens[i + 2].surface) ||
        !tokens[i + 3].is_word() || tokens[i + 4].surface != "-" ||
        !tokens[i + 5].is_word())
      continue;
    const Token &affix = tokens[i + 5];
    std::string expanded = tokens[i].surface + " - " + affix.surface;
    if (!ExpansionAllowed(config, expanded, affix.surface)) continue;
    Token copy = affix;
    tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(i + 2), copy);
    changed = true;
  }
  return changed;
}

}  // namespace

SpuriousPattern SpuriousPattern::Regex(Scope scope,
                                       const std::string &pattern) {
  return {scope, pattern, std::regex(pattern)};
}

SpuriousPattern SpuriousPattern::Literal(Scope scope,
                                         const std::string &text) {
  return {scope, text, std::regex(EscapeRegex(text))};
}

PreprocessConfig PreprocessConfig::Defaults() {
  using Scope = SpuriousPattern::Scope;
  PreprocessConfig config;
  // Section indicators: "RESULTS :", "MATERIALS AND METHODS :".
  config.spurious.push_back(SpuriousPattern::Regex(
      Scope::kLeading, R"([A-Z][A-Z]+( [A-Z][A-Z]+)* :)"));
  config.spurious.push_back(SpuriousPattern::Regex(
      Scope::kBracketed, R"(^(Fig|Figs|Figure|Figures|Table|Tables|ref|refs|Ref|Refs)\b)"));
  config.spurious.push_back(SpuriousPattern::Regex(
      Scope::kBracketed, R"(^[0-9]+( ?[,;-] ?[0-9]+)*$)"));
  config.ellipsis = {EllipsisRule::kFusedSuffix, EllipsisRule::kHyphenSuffix};
  return config;
}

PreprocessConfig PreprocessConfig::Identity() {
  PreprocessConfig config;
  config.conjunctions.clear();
  return config;
}

PreprocessConfig LoadPreprocessConfig(std::istream &in) {
  using Scope = SpuriousPattern::Scope;
  std::vector<KeyValue> entries = ReadKeyValues(in);
  PreprocessConfig config = PreprocessConfig::Identity();
  config.conjunctions = {"and", "or"};
  for (const KeyValue &kv : entries) {
    if (kv.key == "defaults" && kv.value == "yes") {
      PreprocessConfig d = PreprocessConfig::Defaults();
      config.spurious.insert(config.spurious.end(), d.spurious.begin(),
                             d.spurious.end());
      config.ellipsis.insert(config.ellipsis.end(), d.ellipsis.begin(),
                             d.ellipsis.end());
    }
  }
  for (const KeyValue &kv : entries) {
    try {
      if (kv.key == "defaults") {
        if (kv.value != "yes" && kv.value != "no")
          throw ParseError(kv.line, "defaults must be yes or no");
      } else if (kv.key == "leading") {
        config.spurious.push_back(SpuriousPattern::Regex(Scope::kLeading, kv.value));
      } else if (kv.key == "leading_literal") {
        config.spurious.push_back(SpuriousPattern::Literal(Scope::kLeading, kv.value));
      } else if (kv.key == "bracketed") {
        config.spurious.push_back(SpuriousPattern::Regex(Scope::kBracketed, kv.value));
      } else if (kv.key == "bracketed_literal") {
        config.spurious.push_back(SpuriousPattern::Literal(Scope::kBracketed, kv.value));
      } else if (kv.key == "ellipsis") {
        if (kv.value == "fused-suffix") {
          config.ellipsis.push_back(EllipsisRule::kFusedSuffix);
        } else if (kv.value == "hyphen-suffix") {
          config.ellipsis.push_back(EllipsisRule::kHyphenSuffix);
        } else {
          throw ParseError(kv.line, "unknown ellipsis rule " + kv.value);
        }
      } else if (kv.key == "conjunctions") {
        config.conjunctions = SplitList(kv.value, kv.line);
      } else if (kv.key == "min_shared_affix") {
        config.min_shared_affix = std::stoul(kv.value);
      } else {
        throw ParseError(kv.line, "unknown key " + kv.key);
      }
    } catch (const std::regex_error &e) {
      throw ParseError(kv.line, std::string("bad pattern: ") + e.what());
    } catch (const std::invalid_argument &) {
      throw ParseError(kv.line, "expected a number");
    }
  }
  return config;
}

Sentence RemoveSpuriousPhrases(const Sentence &sentence,
                               const PreprocessConfig &config) {
  if (config.spurious.empty() || sentence.empty()) return sentence;
  std::vector<Token> tokens = sentence.tokens();
  bool changed = false;
  while (StripLeading(tokens, config.spurious)) changed = true;
  while (StripBracketed(tokens, config.spurious)) changed = true;
  if (!changed) return sentence;
  return Sentence::FromTokens(sentence.id(), std::move(tokens),
                              sentence.provenance());
}

Sentence ResolveCoordinationEllipsis(const Sentence &sentence,
                                     const PreprocessConfig &config) {
  std::vector<Token> tokens = sentence.tokens();
  bool changed = false;
  for (EllipsisRule rule : config.ellipsis) {
    switch (rule) {
      case EllipsisRule::kFusedSuffix:
        changed |= ApplyFusedSuffix(tokens, config);
        break;
      case EllipsisRule::kHyphenSuffix:
        changed |= ApplyHyphenSuffix(tokens, config);
        break;
    }
  }
  if (!changed) return sentence;
  return Sentence::FromTokens(sentence.id(), std::move(tokens),
                              sentence.provenance());
}

}  // namespace gramsplit
