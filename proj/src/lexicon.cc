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

#include "gramsplit/lexicon.h"

#include <algorithm>
#include <cctype>

#include "gramsplit/error.h"

namespace gramsplit {

namespace {

bool IsUpper(char c) { return c >= 'A' && c <= 'Z'; }
bool IsSubscriptChar(char c) { return (c >= 'a' && c <= 'z') || c == '*'; }

bool LooksLikeConnector(std::string_view s) {
  if (s.size() < 2) return false;
  char dir = s.back();
  if (dir != '+' && dir != '-') return false;
  size_t i = 0;
  while (i + 1 < s.size() && IsUpper(s[i])) ++i;
  if (i == 0) return false;
  while (i + 1 < s.size() && IsSubscriptChar(s[i])) ++i;
  return i + 1 == s.size();
}

enum class Tok {
  kBare, kQuoted, kMacro, kColon, kSemicolon, kLParen, kRParen, kLBrace,
  kRBrace, kLBracket, kRBracket, kAmp, kEnd,
};

struct Lexeme {
  Tok tok;
  std::string text;
  int line;
};

class DictLexer {
 public:
  explicit DictLexer(std::string text) : text_(std::move(text)) {}

  Lexeme Next() {
    SkipSpaceAndComments();
    if (pos_ >= text_.size()) return {Tok::kEnd, "", line_};
    char c = text_[pos_];
    auto single = [&](Tok t) {
      ++pos_;
      return Lexeme{t, std::string(1, c), line_};
    };
    switch (c) {
      case ':': return single(Tok::kColon);
      case ';': return single(Tok::kSemicolon);
      case '(': return single(Tok::kLParen);
      case ')': return single(Tok::kRParen);
      case '{': return single(Tok::kLBrace);
      case '}': return single(Tok::kRBrace);
      case '[': return single(Tok::kLBracket);
      case ']': return single(Tok::kRBracket);
      case '&': return single(Tok::kAmp);
      default: break;
    }
    if (c == '"') {
      size_t close = text_.find('"', pos_ + 1);
      if (close == std::string::npos) throw ParseError(line_, "unclosed quote");
      Lexeme l{Tok::kQuoted, text_.substr(pos_ + 1, close - pos_ - 1), line_};
      pos_ = close + 1;
      return l;
    }
    if (c == '<') {
      size_t close = text_.find('>', pos_);
      if (close == std::string::npos) throw ParseError(line_, "unclosed macro name");
      Lexeme l{Tok::kMacro, text_.substr(pos_, close - pos_ + 1), line_};
      pos_ = close + 1;
      return l;
    }
    size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           std::string_view(":;(){}[]&\"%").find(text_[pos_]) == std::string_view::npos)
      ++pos_;
    return {Tok::kBare, text_.substr(start, pos_ - start), line_};
  }

 private:
  void SkipSpaceAndComments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string text_;
  size_t pos_ = 0;
  int line_ = 1;
};

// Connectors in expression order, with accumulated cost.
struct RawDisjunct {
  std::vector<Connector> connectors;
  int cost = 0;
};
using RawSet = std::vector<RawDisjunct>;

constexpr size_t kMaxExpansion = 200000;

class DictParser {
 public:
  explicit DictParser(std::string text) : lexer_(std::move(text)) { Advance(); }

  void Run(std::map<std::string, std::vector<Disjunct>, std::less<>> &entries) {
    while (cur_.tok != Tok::kEnd) {
      int line = cur_.line;
      std::vector<Lexeme> names;
      while (cur_.tok == Tok::kBare || cur_.tok == Tok::kQuoted ||
             cur_.tok == Tok::kMacro) {
        names.push_back(cur_);
        Advance();
      }
      if (names.empty()) throw ParseError(cur_.line, "expected a word list");
      Expect(Tok::kColon, "':'");
      RawSet expr = ParseOr();
      Expect(Tok::kSemicolon, "';'");
      if (names.size() == 1 && names[0].tok == Tok::kMacro) {
        macros_[names[0].text] = std::move(expr);
        continue;
      }
      std::vector<Disjunct> disjuncts = Finish(expr, line);
      for (const Lexeme &n : names) {
        if (n.tok == Tok::kMacro)
          throw ParseError(n.line, "macro name in a word list");
        auto &slot = entries[n.text];
        for (const Disjunct &d : disjuncts) {
          auto it = std::find_if(slot.begin(), slot.end(), [&](const Disjunct &e) {
            return e.left == d.left && e.right == d.right;
          });
          if (it == slot.end()) {
            slot.push_back(d);
          } else {
            it->cost = std::min(it->cost, d.cost);
          }
        }
      }
    }
  }

 private:
  void Advance() { cur_ = lexer_.Next(); }

  void Expect(Tok tok, const char *what) {
    if (cur_.tok != tok)
      throw ParseError(cur_.line, std::string("expected ") + what + " near '" +
                                      cur_.text + "'");
    Advance();
  }

  bool AtOr() const { return cur_.tok == Tok::kBare && cur_.text == "or"; }
  bool AtAnd() const {
    return cur_.tok == Tok::kAmp || (cur_.tok == Tok::kBare && cur_.text == "and");
  }

  RawSet ParseOr() {
    RawSet out = ParseAnd();
    while (AtOr()) {
      Advance();
      RawSet rhs = ParseAnd();
      out.insert(out.end(), rhs.begin(), rhs.end());
      CheckSize(out);
    }
    return out;
  }

  RawSet ParseAnd() {
    RawSet out = ParseUnary();
    while (AtAnd()) {
      Advance();
      RawSet rhs = ParseUnary();
      RawSet product;
      product.reserve(out.size() * rhs.size());
      for (const RawDisjunct &a : out) {
        for (const RawDisjunct &b : rhs) {
          RawDisjunct d = a;
          d.connectors.insert(d.connectors.end(), b.connectors.begin(),
                              b.connectors.end());
          d.cost += b.cost;
          product.push_back(std::move(d));
        }
      }
      out = std::move(product);
      CheckSize(out);
    }
    return out;
  }

  RawSet ParseUnary() {
    switch (cur_.tok) {
      case Tok::kLParen: {
        Advance();
        if (cur_.tok == Tok::kRParen) {
          Advance();
          return {RawDisjunct{}};
        }
        RawSet inner = ParseOr();
        Expect(Tok::kRParen, "')'");
        return inner;
      }
      case Tok::kLBrace: {
        Advance();
        RawSet inner = ParseOr();
        Expect(Tok::kRBrace, "'}'");
        inner.push_back(RawDisjunct{});
        return inner;
      }
      case Tok::kLBracket: {
        Advance();
        RawSet inner = ParseOr();
        Expect(Tok::kRBracket, "']'");
        for (RawDisjunct &d : inner) ++d.cost;
        return inner;
      }
      case Tok::kMacro: {
        auto it = macros_.find(cur_.text);
        if (it == macros_.end())
          throw ParseError(cur_.line, "undefined macro " + cur_.text);
        Advance();
        return it->second;
      }
      case Tok::kBare: {
        if (!LooksLikeConnector(cur_.text))
          throw ParseError(cur_.line, "bad connector '" + cur_.text + "'");
        RawDisjunct d;
        d.connectors.push_back(Connector::Parse(cur_.text));
        Advance();
        return {d};
      }
      default:
        throw ParseError(cur_.line, "unexpected '" + cur_.text + "'");
    }
  }

  void CheckSize(const RawSet &set) const {
    if (set.size() > kMaxExpansion)
      throw ParseError(cur_.line, "expression expands to too many disjuncts");
  }

  static std::vector<Disjunct> Finish(const RawSet &raw, int line) {
    std::vector<Disjunct> out;
    for (const RawDisjunct &r : raw) {
      if (r.cost > 9) throw CostOverflow(line, r.cost);
      Disjunct d;
      d.cost = r.cost;
      for (const Connector &c : r.connectors) {
        (c.direction == Direction::kLeft ? d.left : d.right).push_back(c);
      }
      std::reverse(d.left.begin(), d.left.end());
      auto it = std::find_if(out.begin(), out.end(), [&](const Disjunct &e) {
        return e.left == d.left && e.right == d.right;
      });
      if (it == out.end()) {
        out.push_back(std::move(d));
      } else {
        it->cost = std::min(it->cost, d.cost);
      }
    }
    return out;
  }

  DictLexer lexer_;
  Lexeme cur_;
  std::map<std::string, RawSet> macros_;
};

const std::vector<Disjunct> &EmptyList() {
  static const std::vector<Disjunct> kEmpty;
  return kEmpty;
}

}  // namespace

Connector Connector::Parse(std::string_view text) {
  if (!LooksLikeConnector(text))
    throw Error("bad connector '" + std::string(text) + "'");
  return {std::string(text.substr(0, text.size() - 1)),
          text.back() == '-' ? Direction::kLeft : Direction::kRight};
}

std::string_view Connector::type() const {
  size_t i = 0;
  while (i < label.size() && IsUpper(label[i])) ++i;
  return std::string_view(label).substr(0, i);
}

std::string_view Connector::subscript() const {
  return std::string_view(label).substr(type().size());
}

std::string Connector::ToString() const {
  return label + (direction == Direction::kLeft ? "-" : "+");
}

bool Match(const Connector &left_word, const Connector &right_word) {
  if (left_word.direction != Direction::kRight ||
      right_word.direction != Direction::kLeft)
    return false;
  if (left_word.type() != right_word.type()) return false;
  std::string_view a = left_word.subscript();
  std::string_view b = right_word.subscript();
  for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i] != b[i] && a[i] != '*' && b[i] != '*') return false;
  }
  return true;
}

std::string LinkLabel(const Connector &left_word, const Connector &right_word) {
  std::string out(left_word.type());
  std::string_view a = left_word.subscript();
  std::string_view b = right_word.subscript();
  for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    char x = i < a.size() ? a[i] : '*';
    char y = i < b.size() ? b[i] : '*';
    out += x != '*' ? x : y;
  }
  return out;
}

std::string Disjunct::ToString() const {
  std::string out;
  for (auto it = left.rbegin(); it != left.rend(); ++it) {
    if (!out.empty()) out += " & ";
    out += it->ToString();
  }
  for (const Connector &c : right) {
    if (!out.empty()) out += " & ";
    out += c.ToString();
  }
  if (out.empty()) out = "()";
  if (cost > 0) out += " [" + std::to_string(cost) + "]";
  return out;
}

Lexicon Lexicon::Load(std::istream &in) {
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  std::map<std::string, std::vector<Disjunct>, std::less<>> raw;
  DictParser(std::move(text)).Run(raw);

  Lexicon lex;
  for (auto &[word, disjuncts] : raw) {
    if (word == "LEFT-WALL") {
      for (Disjunct &d : disjuncts) {
        if (d.left.empty() && !d.right.empty()) lex.wall_.push_back(d);
      }
      continue;
    }
    std::erase_if(disjuncts, [](const Disjunct &d) { return d.empty(); });
    if (word == "UNKNOWN-WORD") {
      lex.unknown_ = std::move(disjuncts);
      lex.policy_ = UnknownWordPolicy::kGenericNoun;
    } else if (word.size() > 1 && word.back() == '*') {
      lex.prefixes_.emplace_back(word.substr(0, word.size() - 1),
                                 std::move(disjuncts));
    } else {
      lex.entries_.emplace(word, std::move(disjuncts));
    }
  }
  std::sort(lex.prefixes_.begin(), lex.prefixes_.end(),
            [](const auto &a, const auto &b) {
              return a.first.size() > b.first.size();
            });
  return lex;
}

bool Lexicon::Contains(std::string_view word) const {
  return entries_.find(word) != entries_.end();
}

const std::vector<Disjunct> &Lexicon::Lookup(std::string_view word,
                                             bool sentence_initial) const {
  auto it = entries_.find(word);
  if (it != entries_.end()) return it->second;
  if (sentence_initial && !word.empty() && IsUpper(word[0])) {
    std::string lower(word);
    lower[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(word[0])));
    it = entries_.find(lower);
    if (it != entries_.end()) return it->second;
  }
  for (const auto &[prefix, disjuncts] : prefixes_) {
    if (word.size() > prefix.size() && word.substr(0, prefix.size()) == prefix)
      return disjuncts;
  }
  if (policy_ == UnknownWordPolicy::kGenericNoun) return unknown_;
  return EmptyList();
}

}  // namespace gramsplit
