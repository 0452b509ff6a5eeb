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

#include "gramsplit/linkparser.h"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <set>
#include <string_view>
#include <tuple>
#include <unordered_map>

#include "gramsplit/error.h"

namespace gramsplit {

namespace {

struct Node;

// Best-first partial linkage of a region. A null node means the region
// contributes no links.
struct Partial {
  int dis = 0;
  int len = 0;
  std::shared_ptr<const Node> node;
};

struct LinkRef {
  int left;
  int right;
  const Connector *left_conn;
  const Connector *right_conn;
};

struct Node {
  int word;
  int disjunct;
  Partial a;
  Partial b;
  int num_links;
  LinkRef links[2];
};

struct RegionKey {
  int lw, rw, le_d, le_c, re_d, re_c, nulls;
  bool operator==(const RegionKey &) const = default;
};

struct RegionKeyHash {
  size_t operator()(const RegionKey &k) const {
    uint64_t h = 1469598103934665603ull;
    for (int v : {k.lw, k.rw, k.le_d, k.le_c, k.re_d, k.re_c, k.nulls}) {
      h ^= static_cast<uint64_t>(static_cast<uint32_t>(v));
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

using Partials = std::vector<Partial>;

int LinkLength(int left, int right) { return right - left - 1; }

class RegionParser {
 public:
  RegionParser(std::vector<const std::vector<Disjunct> *> lists, size_t limit)
      : lists_(std::move(lists)), limit_(limit) {
    // Connector types are interned so candidate partners can be looked up
    // by the type of their farthest connector instead of tried one by one.
    std::unordered_map<std::string_view, int> ids;
    auto intern = [&ids](const Connector &c) {
      return ids.emplace(c.type(), static_cast<int>(ids.size())).first->second;
    };
    const size_t n = lists_.size();
    left_types_.resize(n);
    right_types_.resize(n);
    for (size_t p = 0; p < n; ++p) {
      for (const Disjunct &d : *lists_[p]) {
        std::vector<int> l, r;
        for (const Connector &c : d.left) l.push_back(intern(c));
        for (const Connector &c : d.right) r.push_back(intern(c));
        left_types_[p].push_back(std::move(l));
        right_types_[p].push_back(std::move(r));
      }
    }
    by_left_far_.assign(n, std::vector<std::vector<int>>(ids.size()));
    by_right_far_.assign(n, std::vector<std::vector<int>>(ids.size()));
    for (size_t p = 0; p < n; ++p) {
      for (size_t di = 0; di < left_types_[p].size(); ++di) {
        if (!left_types_[p][di].empty())
          by_left_far_[p][left_types_[p][di].back()].push_back(static_cast<int>(di));
        if (!right_types_[p][di].empty())
          by_right_far_[p][right_types_[p][di].back()].push_back(static_cast<int>(di));
      }
    }
  }

  // Linkages of the interior of (lw, rw) in which lw still has to attach the
  // first le_c connectors of its right list and rw the first re_c of its left
  // list, leaving exactly `nulls` interior words unlinked.
  const Partials &Count(int lw, int rw, int le_d, int le_c, int re_d, int re_c,
                        int nulls) {
    if (nulls < 0 || nulls > rw - lw - 1) return empty_;
    if (le_c == 0) le_d = 0;
    if (re_c == 0) re_d = 0;
    if (rw == lw + 1) {
      return (le_c == 0 && re_c == 0 && nulls == 0) ? unit_ : empty_;
    }
    if (le_c == 0 && re_c == 0) {
      return nulls == rw - lw - 1 ? unit_ : empty_;
    }
    RegionKey key{lw, rw, le_d, le_c, re_d, re_c, nulls};
    auto found = memo_.find(key);
    if (found != memo_.end()) return found->second;

    Partials out;
    const Connector *le_far =
        le_c > 0 ? &(*lists_[lw])[le_d].right[le_c - 1] : nullptr;
    const Connector *re_far =
        re_c > 0 ? &(*lists_[rw])[re_d].left[re_c - 1] : nullptr;

    const int le_type = le_c > 0 ? right_types_[lw][le_d][le_c - 1] : -1;
    const int re_type = re_c > 0 ? left_types_[rw][re_d][re_c - 1] : -1;

    for (int w = lw + 1; w < rw; ++w) {
      const std::vector<Disjunct> &ds = *lists_[w];
      const std::vector<int> &candidates =
          le_far != nullptr ? by_left_far_[w][le_type] : by_right_far_[w][re_type];
      for (int di : candidates) {
        const Disjunct &d = ds[di];
        const int nl = static_cast<int>(d.left.size());
        const int nr = static_cast<int>(d.right.size());
        if (le_far != nullptr) {
          if (!Match(*le_far, d.left[nl - 1])) continue;
          const bool to_right = re_far != nullptr && nr > 0 &&
                                right_types_[w][di][nr - 1] == re_type &&
                                Match(d.right[nr - 1], *re_far);
          const LinkRef left_link{lw, w, le_far, &d.left[nl - 1]};
          for (int lc = 0; lc <= nulls; ++lc) {
            const int rc = nulls - lc;
            if (lc > w - lw - 1 || rc > rw - w - 1) continue;
            const Partials &l = Count(lw, w, le_d, le_c - 1, di, nl - 1, lc);
            if (l.empty()) continue;
            if (to_right) {
              const Partials &r = Count(w, rw, di, nr - 1, re_d, re_c - 1, rc);
              LinkRef right_link{w, rw, &d.right[nr - 1], re_far};
              Combine(l, r, w, di, d.cost, {left_link, right_link}, 2, out);
            }
            const Partials &r = Count(w, rw, di, nr, re_d, re_c, rc);
            Combine(l, r, w, di, d.cost, {left_link, left_link}, 1, out);
          }
        } else {
          if (!Match(d.right[nr - 1], *re_far)) continue;
          const LinkRef right_link{w, rw, &d.right[nr - 1], re_far};
          for (int lc = 0; lc <= nulls; ++lc) {
            const int rc = nulls - lc;
            if (lc > w - lw - 1 || rc > rw - w - 1) continue;
            const Partials &l = Count(lw, w, 0, 0, di, nl, lc);
            if (l.empty()) continue;
            const Partials &r = Count(w, rw, di, nr - 1, re_d, re_c - 1, rc);
            Combine(l, r, w, di, d.cost, {right_link, right_link}, 1, out);
          }
        }
      }
    }
    Finish(out);
    return memo_.emplace(key, std::move(out)).first->second;
  }

  void Finish(Partials &out) const {
    std::stable_sort(out.begin(), out.end(),
                     [](const Partial &x, const Partial &y) {
                       return std::tie(x.dis, x.len) < std::tie(y.dis, y.len);
                     });
    if (out.size() > limit_) out.resize(limit_);
  }

  size_t limit() const { return limit_; }

 private:
  void Combine(const Partials &l, const Partials &r, int w, int di, int cost,
               std::array<LinkRef, 2> links, int num_links, Partials &out) {
    if (r.empty()) return;
    int extra_len = 0;
    for (int i = 0; i < num_links; ++i)
      extra_len += LinkLength(links[i].left, links[i].right);
    for (size_t i = 0; i < l.size(); ++i) {
      for (size_t j = 0; j < r.size(); ++j) {
        // Only pairs that can rank within the first `limit_` sums.
        if ((i + 1) > limit_ / (j + 1)) break;
        auto node = std::make_shared<Node>(
            Node{w, di, l[i], r[j], num_links, {links[0], links[1]}});
        out.push_back(Partial{l[i].dis + r[j].dis + cost,
                              l[i].len + r[j].len + extra_len,
                              std::move(node)});
      }
    }
  }

  std::vector<const std::vector<Disjunct> *> lists_;
  size_t limit_;
  // [position][disjunct][connector] -> interned type.
  std::vector<std::vector<std::vector<int>>> left_types_;
  std::vector<std::vector<std::vector<int>>> right_types_;
  // [position][type] -> disjuncts whose farthest connector has that type.
  std::vector<std::vector<std::vector<int>>> by_left_far_;
  std::vector<std::vector<std::vector<int>>> by_right_far_;
  std::unordered_map<RegionKey, Partials, RegionKeyHash> memo_;
  const Partials empty_;
  const Partials unit_{Partial{}};
};

void Collect(const Partial &p,
             const std::vector<const std::vector<Disjunct> *> &lists,
             Linkage &out) {
  std::vector<const Node *> stack;
  if (p.node) stack.push_back(p.node.get());
  while (!stack.empty()) {
    const Node *n = stack.back();
    stack.pop_back();
    out.chosen[n->word] = (*lists[n->word])[n->disjunct];
    for (int i = 0; i < n->num_links; ++i) {
      const LinkRef &l = n->links[i];
      out.links.push_back(
          Link{l.left, l.right, LinkLabel(*l.left_conn, *l.right_conn)});
    }
    if (n->a.node) stack.push_back(n->a.node.get());
    if (n->b.node) stack.push_back(n->b.node.get());
  }
}

void Finalize(Linkage &linkage) {
  std::sort(linkage.links.begin(), linkage.links.end());
  const int n = linkage.sentence_size();
  linkage.used.clear();
  linkage.skipped.clear();
  for (const auto &[pos, d] : linkage.chosen) linkage.used.push_back(pos);
  for (int i = 1; i <= n; ++i) {
    if (!linkage.chosen.contains(i)) linkage.skipped.push_back(i);
  }
  linkage.cost = CostVector{};
  linkage.cost.unused = static_cast<int>(linkage.skipped.size());
  for (const auto &[pos, d] : linkage.chosen) linkage.cost.dis += d.cost;
  for (const Link &l : linkage.links)
    linkage.cost.len += LinkLength(l.left, l.right);
}

}  // namespace

std::string CostVector::ToString() const {
  return "(UNUSED=" + std::to_string(unused) + " DIS=" + std::to_string(dis) +
         " AND=" + std::to_string(and_cost) + " LEN=" + std::to_string(len) +
         ")";
}

std::vector<Linkage> Parse(std::span<const std::string> words,
                           const Lexicon &lexicon,
                           const ParseOptions &options) {
  if (words.empty()) throw EmptyInput("no words to parse");
  const int nwords = static_cast<int>(words.size());
  const int right_end = nwords + 1;
  static const std::vector<Disjunct> kNone;

  std::vector<const std::vector<Disjunct> *> lists;
  lists.reserve(nwords + 2);
  lists.push_back(&lexicon.wall());
  for (int i = 0; i < nwords; ++i)
    lists.push_back(&lexicon.Lookup(words[i], i == 0));
  lists.push_back(&kNone);

  const size_t limit = options.max_linkages > 0
                           ? static_cast<size_t>(options.max_linkages)
                           : std::numeric_limits<size_t>::max();
  const int max_null = options.max_null < 0 ? nwords
                                            : std::min(options.max_null, nwords);

  std::vector<std::string> all_words;
  all_words.reserve(nwords + 1);
  all_words.push_back("LEFT-WALL");
  all_words.insert(all_words.end(), words.begin(), words.end());

  RegionParser parser(lists, limit);
  const std::vector<Disjunct> &wall = lexicon.wall();
  for (int nulls = 0; nulls <= max_null; ++nulls) {
    // Each top-level partial remembers the wall disjunct it used.
    std::vector<std::pair<Partial, int>> top;
    for (int wi = 0; wi < static_cast<int>(wall.size()); ++wi) {
      const int nr = static_cast<int>(wall[wi].right.size());
      if (nr == 0) continue;
      for (const Partial &p :
           parser.Count(0, right_end, wi, nr, 0, 0, nulls)) {
        top.emplace_back(
            Partial{p.dis + wall[wi].cost, p.len, p.node}, wi);
      }
    }
    std::stable_sort(top.begin(), top.end(), [](const auto &x, const auto &y) {
      return std::tie(x.first.dis, x.first.len) <
             std::tie(y.first.dis, y.first.len);
    });
    if (top.size() > limit) top.resize(limit);

    std::vector<Linkage> result;
    for (const auto &[p, wi] : top) {
      Linkage linkage;
      linkage.words = all_words;
      linkage.chosen[0] = wall[wi];
      Collect(p, lists, linkage);
      Finalize(linkage);
      result.push_back(std::move(linkage));
    }
    if (result.empty() && nulls == nwords) {
      Linkage linkage;
      linkage.words = all_words;
      Finalize(linkage);
      result.push_back(std::move(linkage));
    }
    if (!result.empty()) return result;
  }
  return {};
}

std::string ValidateLinkage(const Linkage &linkage) {
  if (linkage.words.empty() || linkage.words[0] != "LEFT-WALL")
    return "first word is not LEFT-WALL";
  const int n = linkage.sentence_size();
  std::set<std::pair<int, int>> pairs;
  std::set<int> ends;
  for (const Link &l : linkage.links) {
    if (l.left < 0 || l.left >= l.right || l.right > n)
      return "link out of range";
    if (!pairs.emplace(l.left, l.right).second) return "duplicate link";
    ends.insert(l.left);
    ends.insert(l.right);
  }
  if (std::vector<int>(ends.begin(), ends.end()) != linkage.used)
    return "used set differs from linked positions";
  std::set<int> chosen_keys;
  for (const auto &[pos, d] : linkage.chosen) chosen_keys.insert(pos);
  if (chosen_keys != ends) return "chosen disjuncts differ from used set";
  std::vector<int> skipped;
  for (int i = 1; i <= n; ++i) {
    if (!ends.contains(i)) skipped.push_back(i);
  }
  if (skipped != linkage.skipped) return "skipped set is not the complement";
  if (!ends.empty() && !ends.contains(0)) return "wall is not linked";

  for (const Link &x : linkage.links) {
    for (const Link &y : linkage.links) {
      if (x.left < y.left && y.left < x.right && x.right < y.right)
        return "crossing links";
    }
  }

  std::map<int, int> parent;
  for (int p : ends) parent[p] = p;
  auto find = [&](int p) {
    while (parent[p] != p) p = parent[p] = parent[parent[p]];
    return p;
  };
  for (const Link &l : linkage.links) parent[find(l.left)] = find(l.right);
  std::set<int> roots;
  for (int p : ends) roots.insert(find(p));
  if (roots.size() > 1) return "linkage is not connected";

  // Partners of each word, nearest first on each side.
  std::map<int, std::vector<int>> left_of, right_of;
  for (const Link &l : linkage.links) {
    right_of[l.left].push_back(l.right);
    left_of[l.right].push_back(l.left);
  }
  for (auto &[p, v] : right_of) std::sort(v.begin(), v.end());
  for (auto &[p, v] : left_of) std::sort(v.rbegin(), v.rend());
  for (const auto &[pos, d] : linkage.chosen) {
    if (left_of[pos].size() != d.left.size() ||
        right_of[pos].size() != d.right.size())
      return "connector count mismatch at position " + std::to_string(pos);
  }
  for (const Link &l : linkage.links) {
    const auto &rv = right_of[l.left];
    const auto &lv = left_of[l.right];
    const size_t i = std::find(rv.begin(), rv.end(), l.right) - rv.begin();
    const size_t j = std::find(lv.begin(), lv.end(), l.left) - lv.begin();
    const Connector &a = linkage.chosen.at(l.left).right[i];
    const Connector &b = linkage.chosen.at(l.right).left[j];
    if (!Match(a, b))
      return "connectors do not match on link " + std::to_string(l.left) +
             "-" + std::to_string(l.right);
    if (LinkLabel(a, b) != l.label) return "wrong link label";
  }

  CostVector expect;
  expect.unused = static_cast<int>(skipped.size());
  for (const auto &[pos, d] : linkage.chosen) expect.dis += d.cost;
  for (const Link &l : linkage.links) expect.len += LinkLength(l.left, l.right);
  if (expect != linkage.cost) return "cost vector mismatch";
  return "";
}

std::string DrawLinkage(const Linkage &linkage) {
  const int n = static_cast<int>(linkage.words.size());
  std::set<int> skipped(linkage.skipped.begin(), linkage.skipped.end());
  std::vector<std::string> shown;
  std::vector<int> col;
  std::string word_line;
  for (int i = 0; i < n; ++i) {
    std::string w = skipped.contains(i) ? "[" + linkage.words[i] + "]"
                                        : linkage.words[i];
    if (i > 0) word_line += ' ';
    col.push_back(static_cast<int>(word_line.size()));
    word_line += w;
  }
  const int width = static_cast<int>(word_line.size());

  // A link sits one row above every link nested inside it.
  std::vector<int> height(linkage.links.size(), 1);
  std::vector<size_t> order(linkage.links.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    const Link &a = linkage.links[x];
    const Link &b = linkage.links[y];
    return a.right - a.left < b.right - b.left;
  });
  int rows = 0;
  for (size_t k = 0; k < order.size(); ++k) {
    const Link &a = linkage.links[order[k]];
    for (size_t m = 0; m < k; ++m) {
      const Link &b = linkage.links[order[m]];
      if (a.left <= b.left && b.right <= a.right)
        height[order[k]] = std::max(height[order[k]], height[order[m]] + 1);
    }
    rows = std::max(rows, height[order[k]]);
  }

  std::vector<std::string> grid(rows + 1, std::string(width, ' '));
  for (size_t k = 0; k < linkage.links.size(); ++k) {
    const Link &l = linkage.links[k];
    const int row = rows - height[k];
    const int a = col[l.left];
    const int b = col[l.right];
    for (int c = a + 1; c < b; ++c) {
      if (grid[row][c] == ' ') grid[row][c] = '-';
    }
    const int span = b - a - 1;
    const int label_len = std::min<int>(span, static_cast<int>(l.label.size()));
    const int start = a + 1 + (span - label_len) / 2;
    for (int c = 0; c < label_len; ++c) grid[row][start + c] = l.label[c];
    grid[row][a] = '+';
    grid[row][b] = '+';
    for (int r = row + 1; r <= rows; ++r) {
      for (int c : {a, b}) {
        if (grid[r][c] == ' ') grid[r][c] = '|';
      }
    }
  }
  std::string out;
  for (std::string &row : grid) {
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row + "\n";
  }
  out += word_line + "\n";
  return out;
}

std::string FormatParse(const std::vector<Linkage> &linkages) {
  if (linkages.empty()) return "No linkages found.\n";
  const Linkage &best = linkages.front();
  std::string out;
  if (best.cost.unused > 0) out += "No complete linkages found.\n";
  out += "Found " + std::to_string(linkages.size()) +
         (linkages.size() == 1 ? " linkage" : " linkages") + " at null count " +
         std::to_string(best.cost.unused) + "\n";
  out += linkages.size() == 1 ? "Unique linkage" : "Linkage 1";
  out += ", cost vector = " + best.cost.ToString() + "\n\n";
  out += DrawLinkage(best);
  return out;
}

}  // namespace gramsplit
