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

// Brute-force linkage enumerators used to check the parser.

#ifndef GRAMSPLIT_TESTS_PARSE_ORACLE_H_
#define GRAMSPLIT_TESTS_PARSE_ORACLE_H_

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gramsplit/lexicon.h"
#include "gramsplit/linkparser.h"

namespace gramsplit::testing {

inline const std::vector<Disjunct> &Options(const Lexicon &lex,
                                     const std::vector<std::string> &words, int p) {
  return p == 0 ? lex.wall() : lex.Lookup(words[p - 1], p == 1);
}

// Canonical form of a linkage: links, the index of each chosen disjunct in
// its word's dictionary entry, and the cost vector.
struct Key {
  std::vector<Link> links;
  std::vector<std::pair<int, int>> chosen;
  int unused = 0;
  int dis = 0;
  int len = 0;
  auto operator<=>(const Key &) const = default;
};

inline Key MakeKey(const Lexicon &lex, const std::vector<std::string> &words,
            std::vector<Link> links, const std::map<int, Disjunct> &chosen,
            const CostVector &cost) {
  Key key;
  std::sort(links.begin(), links.end());
  key.links = std::move(links);
  for (const auto &[p, d] : chosen) {
    const auto &options = Options(lex, words, p);
    const int index = static_cast<int>(std::find(options.begin(), options.end(), d) -
                                       options.begin());
    key.chosen.emplace_back(p, index);
  }
  key.unused = cost.unused;
  key.dis = cost.dis;
  key.len = cost.len;
  return key;
}

inline std::set<Key> ParserKeys(const std::vector<std::string> &words, const Lexicon &lex) {
  ParseOptions options;
  options.max_linkages = 0;
  std::set<Key> keys;
  for (const Linkage &l : Parse(words, lex, options)) {
    if (!ValidateLinkage(l).empty()) {
      keys.insert(Key{{{-1, -1, ValidateLinkage(l)}}, {}, -1, -1, -1});
      continue;
    }
    keys.insert(MakeKey(lex, words, l.links, l.chosen, l.cost));
  }
  return keys;
}

inline bool Connected(int positions, const std::vector<Link> &links,
               const std::vector<bool> &used) {
  std::vector<int> parent(positions);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const Link &l : links) parent[find(l.left)] = find(l.right);
  int root = -1;
  for (int p = 0; p < positions; ++p) {
    if (!used[p]) continue;
    if (root < 0) root = find(p);
    if (find(p) != root) return false;
  }
  return true;
}

// Keeps only the assignments at the smallest null count.
struct Collector {
  const Lexicon &lex;
  const std::vector<std::string> &words;
  int best_null = 1 << 30;
  std::set<Key> keys;

  void Offer(int nulls, const std::vector<Link> &links,
             const std::map<int, Disjunct> &chosen) {
    if (nulls > best_null) return;
    if (nulls < best_null) {
      best_null = nulls;
      keys.clear();
    }
    CostVector cost;
    cost.unused = nulls;
    for (const auto &[p, d] : chosen) cost.dis += d.cost;
    for (const Link &l : links) cost.len += l.right - l.left - 1;
    keys.insert(MakeKey(lex, words, links, chosen, cost));
  }

  // Shared final checks: distinct word pairs, the wall takes part whenever
  // anything links, and the linked words form one component.
  void Check(int positions, const std::vector<Link> &links,
             const std::map<int, Disjunct> &chosen) {
    std::set<std::pair<int, int>> pairs;
    for (const Link &l : links) {
      if (!pairs.insert({l.left, l.right}).second) return;
    }
    std::vector<bool> used(positions, false);
    for (const auto &[p, d] : chosen) used[p] = true;
    if (!chosen.empty() && !used[0]) return;
    if (!Connected(positions, links, used)) return;
    int nulls = 0;
    for (int p = 1; p < positions; ++p) nulls += used[p] ? 0 : 1;
    Offer(nulls, links, chosen);
  }
};

// Oracle 1: every word either takes one of its disjuncts or stays null.
// A planar linkage whose connectors attach nearest-first is exactly a
// well-nested bracketing in which each word first closes its left
// connectors (nearest first) and then opens its right connectors (farthest
// first), so a stack pairs the connectors. Prefixes that cannot nest, that
// leave more open connectors than the remaining words could close, or that
// already hold more null words than the best complete assignment are
// abandoned; everything else is enumerated.
inline std::set<Key> StackOracle(const std::vector<std::string> &words, const Lexicon &lex) {
  const int positions = static_cast<int>(words.size()) + 1;
  std::vector<size_t> closable(positions + 1, 0);
  for (int p = positions - 1; p >= 0; --p) {
    size_t most = 0;
    for (const Disjunct &d : Options(lex, words, p)) most = std::max(most, d.left.size());
    closable[p] = closable[p + 1] + most;
  }
  Collector collector{lex, words, 1 << 30, {}};
  std::vector<std::pair<int, Connector>> stack;
  std::vector<Link> links;
  std::map<int, Disjunct> chosen;

  std::function<void(int, int)> visit = [&](int p, int nulls) {
    if (nulls > collector.best_null || stack.size() > closable[p]) return;
    if (p == positions) {
      if (stack.empty()) collector.Check(positions, links, chosen);
      return;
    }
    for (const Disjunct &d : Options(lex, words, p)) {
      std::vector<std::pair<int, Connector>> popped;
      bool ok = true;
      for (const Connector &c : d.left) {
        if (stack.empty() || !Match(stack.back().second, c)) {
          ok = false;
          break;
        }
        links.push_back({stack.back().first, p, LinkLabel(stack.back().second, c)});
        popped.push_back(stack.back());
        stack.pop_back();
      }
      if (ok) {
        for (auto it = d.right.rbegin(); it != d.right.rend(); ++it)
          stack.emplace_back(p, *it);
        chosen[p] = d;
        visit(p + 1, nulls);
        chosen.erase(p);
        stack.resize(stack.size() - d.right.size());
      }
      links.resize(links.size() - popped.size());
      stack.insert(stack.end(), popped.rbegin(), popped.rend());
    }
    visit(p + 1, p == 0 ? nulls : nulls + 1);  // p stays null
  };
  visit(0, 0);
  return collector.keys;
}

// Oracle 2: the definition taken literally. Every subset of word pairs is
// tried; non-crossing subsets are then given every disjunct assignment that
// consumes exactly the links at each word, nearest partner first.
inline std::set<Key> NaiveOracle(const std::vector<std::string> &words, const Lexicon &lex) {
  const int positions = static_cast<int>(words.size()) + 1;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < positions; ++a)
    for (int b = a + 1; b < positions; ++b) pairs.emplace_back(a, b);
  Collector collector{lex, words, 1 << 30, {}};
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<std::pair<int, int>> set;
    for (size_t i = 0; i < pairs.size(); ++i)
      if (mask & (1u << i)) set.push_back(pairs[i]);
    bool crossing = false;
    for (auto [a, b] : set)
      for (auto [c, d] : set)
        if (a < c && c < b && b < d) crossing = true;
    if (crossing) continue;
    // Partners of each word, nearest first on each side.
    std::vector<std::vector<int>> lefts(positions), rights(positions);
    for (auto [a, b] : set) {
      rights[a].push_back(b);
      lefts[b].push_back(a);
    }
    for (int p = 0; p < positions; ++p) {
      std::sort(rights[p].begin(), rights[p].end());
      std::sort(lefts[p].rbegin(), lefts[p].rend());
    }
    std::map<int, Disjunct> chosen;
    std::function<void(int)> assign = [&](int p) {
      if (p == positions) {
        std::vector<Link> links;
        for (auto [a, b] : set) {
          const Disjunct &da = chosen.at(a);
          const Disjunct &db = chosen.at(b);
          auto ia = std::find(rights[a].begin(), rights[a].end(), b) - rights[a].begin();
          auto ib = std::find(lefts[b].begin(), lefts[b].end(), a) - lefts[b].begin();
          if (!Match(da.right[ia], db.left[ib])) return;
          links.push_back({a, b, LinkLabel(da.right[ia], db.left[ib])});
        }
        collector.Check(positions, links, chosen);
        return;
      }
      if (lefts[p].empty() && rights[p].empty()) {
        assign(p + 1);
        return;
      }
      for (const Disjunct &d : Options(lex, words, p)) {
        if (d.left.size() != lefts[p].size() || d.right.size() != rights[p].size())
          continue;
        chosen[p] = d;
        assign(p + 1);
        chosen.erase(p);
      }
    };
    assign(0);
  }
  return collector.keys;
}

struct OracleReport {
  long checked = 0;
  long mismatches = 0;
  long complete = 0;
  double seconds = 0;
  std::string first_mismatch;
};

// Compares the parser against StackOracle on every sentence of 1..max_length
// words drawn from vocabulary.
inline OracleReport CompareExhaustive(const Lexicon &lex,
                                      const std::vector<std::string> &vocabulary,
                                      size_t max_length) {
  OracleReport report;
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> words;
  std::function<void(size_t)> grow = [&](size_t length) {
    if (words.size() == length) {
      const auto expected = StackOracle(words, lex);
      if (expected != ParserKeys(words, lex)) {
        if (report.mismatches++ == 0) {
          for (const auto &w : words) report.first_mismatch += w + " ";
        }
      }
      if (!expected.empty() && expected.begin()->unused == 0) ++report.complete;
      ++report.checked;
      return;
    }
    for (const std::string &w : vocabulary) {
      words.push_back(w);
      grow(length);
      words.pop_back();
    }
  };
  for (size_t n = 1; n <= max_length; ++n) grow(n);
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

inline const std::vector<std::string> &ToyVocabulary() {
  static const std::vector<std::string> *words = new std::vector<std::string>{
      "the", "a", "big", "dog", "cat", "saw", "with", "runs", "quickly", "."};
  return *words;
}

}  // namespace gramsplit::testing

#endif  // GRAMSPLIT_TESTS_PARSE_ORACLE_H_
