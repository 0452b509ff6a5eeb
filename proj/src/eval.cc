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

#include "gramsplit/eval.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <iterator>
#include <map>
#include <set>
#include <thread>

#include "gramsplit/error.h"
#include "gramsplit/pipeline.h"
#include "json.hpp"

namespace gramsplit {

namespace {

struct RawMention {
  size_t start;
  size_t end;
  std::vector<std::string> pairs;
};

std::vector<std::string> PairIds(std::string_view attrs) {
  std::vector<std::string> ids;
  size_t at = attrs.find("pair=");
  if (at == std::string_view::npos) return ids;
  size_t i = at + 5;
  char quote = 0;
  if (i < attrs.size() && (attrs[i] == '"' || attrs[i] == '\'')) quote = attrs[i++];
  std::string current;
  for (; i < attrs.size(); ++i) {
    char c = attrs[i];
    if (quote ? c == quote : std::isspace(static_cast<unsigned char>(c))) break;
    if (c == ',') {
      if (!current.empty()) ids.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) ids.push_back(current);
  return ids;
}

bool IsBlank(std::string_view line) {
  return std::all_of(line.begin(), line.end(),
                     [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

// Strips tags from one abstract; offsets in errors are relative to `base`.
std::string StripTags(std::string_view block, size_t base,
                      std::vector<RawMention> &mentions) {
  std::string plain;
  std::optional<RawMention> open;
  size_t open_at = 0;
  size_t i = 0;
  while (i < block.size()) {
    if (block.compare(i, 7, "</prot>") == 0) {
      if (!open) throw FormatError(base + i, "closing tag without an open mention");
      open->end = plain.size();
      if (open->end == open->start)
        throw FormatError(base + open_at, "empty mention");
      mentions.push_back(std::move(*open));
      open.reset();
      i += 7;
      continue;
    }
    if (block.compare(i, 5, "<prot") == 0 &&
        (i + 5 < block.size() && (block[i + 5] == '>' || block[i + 5] == ' '))) {
      size_t close = block.find('>', i);
      if (close == std::string_view::npos)
        throw FormatError(base + i, "unterminated tag");
      if (open) throw FormatError(base + i, "nested mention");
      open = RawMention{plain.size(), 0, PairIds(block.substr(i + 5, close - i - 5))};
      open_at = i;
      i = close + 1;
      continue;
    }
    plain += block[i++];
  }
  if (open) throw FormatError(base + open_at, "mention is never closed");
  return plain;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::vector<LabeledSentence> IngestCorpus(std::string_view text) {
  std::vector<LabeledSentence> out;
  // Collect blocks of consecutive non-blank lines.
  std::vector<std::pair<size_t, size_t>> blocks;
  size_t pos = 0;
  size_t block_start = std::string_view::npos;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (IsBlank(line)) {
      if (block_start != std::string_view::npos) blocks.emplace_back(block_start, pos);
      block_start = std::string_view::npos;
    } else if (block_start == std::string_view::npos) {
      block_start = pos;
    }
    pos = eol + 1;
  }
  if (block_start != std::string_view::npos) blocks.emplace_back(block_start, text.size());

  int doc = 0;
  for (auto [bs, be] : blocks) {
    ++doc;
    const std::string doc_id = "doc" + std::to_string(doc);
    std::vector<RawMention> mentions;
    std::string plain = StripTags(text.substr(bs, be - bs), bs, mentions);
    for (char &c : plain) {
      if (c == '\n' || c == '\r' || c == '\t') c = ' ';
    }
    int index = 0;
    for (auto [ss, se] : SegmentSentenceRanges(plain)) {
      LabeledSentence ls;
      ls.sentence = Sentence::FromText(doc_id + ".s" + std::to_string(index + 1),
                                       std::string_view(plain).substr(ss, se - ss),
                                       Provenance{doc_id, index});
      ++index;
      std::map<std::string, int> pair_counts;
      const std::vector<Token> &tokens = ls.sentence.tokens();
      for (const RawMention &m : mentions) {
        if (m.start < ss || m.start >= se) continue;
        const size_t ms = m.start - ss;
        const size_t me = std::min(m.end, se) - ss;
        EntityMention em;
        em.begin = tokens.size();
        for (size_t t = 0; t < tokens.size(); ++t) {
          if (tokens[t].span.end > ms && tokens[t].span.start < me) {
            em.begin = std::min(em.begin, t);
            em.end = t + 1;
          }
        }
        if (em.begin >= em.end) continue;
        em.surface = plain.substr(m.start, std::min(m.end, se) - m.start);
        ls.protein_mentions.push_back(std::move(em));
        for (const std::string &p : m.pairs) ++pair_counts[p];
      }
      for (const auto &[id, n] : pair_counts) ls.gold_positive |= n >= 2;
      out.push_back(std::move(ls));
    }
  }
  return out;
}

std::vector<LabeledSentence> IngestCorpus(std::istream &in) {
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return IngestCorpus(text);
}

Gazetteer MentionGazetteer(const std::vector<LabeledSentence> &corpus) {
  Gazetteer g;
  for (const LabeledSentence &ls : corpus) {
    for (const EntityMention &m : ls.protein_mentions) g.Add(m.surface);
  }
  return g;
}

MockClassifier::MockClassifier(Gazetteer entities,
                               std::vector<std::string> triggers)
    : entities_(std::move(entities)), triggers_(std::move(triggers)) {
  for (std::string &t : triggers_) t = Lower(t);
}

std::vector<std::string> MockClassifier::DefaultTriggers() {
  return {"binds",        "bind",         "bound",       "binding",
          "interacts",    "interact",     "interacted",  "interaction",
          "activates",    "activate",     "activated",   "activation",
          "phosphorylates", "phosphorylated", "phosphorylation",
          "co-immunoprecipitated", "associates", "associated", "association",
          "inhibits",     "inhibited",    "recruits",    "recruited",
          "complex"};
}

Verdict MockClassifier::Classify(const Sentence &sentence) const {
  const std::vector<Token> &tokens = sentence.tokens();
  std::vector<std::pair<size_t, size_t>> entities;
  std::vector<bool> covered(tokens.size(), false);
  if (!entities_.empty()) {
    for (const EntityMention &m : RecognizeGenes(sentence, entities_)) {
      entities.emplace_back(m.begin, m.end);
      for (size_t i = m.begin; i < m.end; ++i) covered[i] = true;
    }
  }
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].is_placeholder() && !covered[i]) entities.emplace_back(i, i + 1);
  }
  if (entities.size() < 2) return Verdict::Of(Confidence::kNone);
  std::sort(entities.begin(), entities.end());
  bool any = false;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (covered[i]) continue;
    const std::string w = Lower(tokens[i].surface);
    if (std::find(triggers_.begin(), triggers_.end(), w) == triggers_.end())
      continue;
    any = true;
    const bool before = entities.front().second <= i;
    const bool after = entities.back().first > i;
    if (before && after) return Verdict::Of(Confidence::kHigh);
  }
  return Verdict::Of(any ? Confidence::kModerate : Confidence::kNone);
}

const char *CategoryName(Category category) {
  switch (category) {
    case Category::kBefore: return "before";
    case Category::kAfter: return "after";
    case Category::kAndComb: return "and_comb";
    case Category::kOrComb: return "or_comb";
  }
  return "";
}

const char *CategoryLabel(Category category) {
  switch (category) {
    case Category::kBefore: return "Before simplification";
    case Category::kAfter: return "After simplification";
    case Category::kAndComb: return "AND combination";
    case Category::kOrComb: return "OR combination";
  }
  return "";
}

Verdict Combine(const Verdict &original, const std::vector<Verdict> &parts,
                Category mode) {
  if (mode == Category::kBefore) return original;
  if (parts.empty()) throw EmptyInput("no simplified parts to combine");
  Verdict after = Verdict::Of(Confidence::kNone);
  for (const Verdict &p : parts) {
    if (p.positive && p.confidence > after.confidence) after = p;
  }
  switch (mode) {
    case Category::kAfter:
      return after;
    case Category::kAndComb:
      if (!original.positive || !after.positive) return Verdict::Of(Confidence::kNone);
      return Verdict::Of(std::min(original.confidence, after.confidence));
    case Category::kOrComb:
      if (!original.positive) return after;
      if (!after.positive) return original;
      return Verdict::Of(std::max(original.confidence, after.confidence));
    case Category::kBefore:
      break;
  }
  return original;
}

void ConfusionCounts::Add(bool gold, bool predicted) {
  if (gold) {
    ++(predicted ? tp : fn);
  } else {
    ++(predicted ? fp : tn);
  }
}

ConfusionCounts &ConfusionCounts::operator+=(const ConfusionCounts &other) {
  tp += other.tp;
  fp += other.fp;
  fn += other.fn;
  tn += other.tn;
  return *this;
}

Metrics ComputeMetrics(const ConfusionCounts &counts) {
  Metrics m;
  if (counts.tp + counts.fn > 0) {
    m.recall = static_cast<double>(counts.tp) / static_cast<double>(counts.tp + counts.fn);
  } else {
    m.recall_undefined = true;
  }
  if (counts.tp + counts.fp > 0) {
    m.precision = static_cast<double>(counts.tp) / static_cast<double>(counts.tp + counts.fp);
  } else {
    m.precision_undefined = true;
  }
  if (m.recall + m.precision > 0)
    m.f_score = 2 * m.precision * m.recall / (m.precision + m.recall);
  return m;
}

Simplifier IdentitySimplifier() {
  return [](const LabeledSentence &ls) { return std::vector<Sentence>{ls.sentence}; };
}

Simplifier PipelineSimplifier(const Resources &resources) {
  return [&resources](const LabeledSentence &ls) {
    std::vector<std::string> surfaces;
    for (const EntityMention &m : ls.protein_mentions) surfaces.push_back(m.surface);
    Gazetteer gold(surfaces);
    GazetteerRecognizer recognizer(&gold);
    try {
      SimplificationResult result =
          SimplifyPipeline(ls.sentence, resources, &recognizer);
      std::vector<Sentence> parts;
      int k = 0;
      for (const std::string &text : RestoredOutputs(result)) {
        parts.push_back(Sentence::FromText(
            ls.sentence.id() + "." + std::to_string(++k), text,
            ls.sentence.provenance()));
      }
      return parts;
    } catch (const Error &) {
      return std::vector<Sentence>{ls.sentence};
    }
  };
}

namespace {

constexpr Category kCategories[] = {Category::kBefore, Category::kAfter,
                                    Category::kAndComb, Category::kOrComb};

struct WorkerTally {
  ConfusionCounts counts[4];
  long sentences = 0;
  long skipped = 0;
  // (sentence index, message), merged in index order.
  std::vector<std::pair<size_t, std::string>> warnings;
};

void Tally(const std::vector<LabeledSentence> &corpus, size_t begin, size_t end,
           const Classifier &classifier, const Simplifier &simplifier,
           ErrorPolicy policy, WorkerTally &tally) {
  for (size_t i = begin; i < end; ++i) {
    const LabeledSentence &ls = corpus[i];
    bool failed = false;
    auto classify = [&](const Sentence &s) {
      try {
        return classifier.Classify(s);
      } catch (const ClassifierError &e) {
        failed = true;
        tally.warnings.emplace_back(
            i, "classifier failed on " + s.id() + ": " + e.what());
        return Verdict::Of(Confidence::kNone);
      }
    };
    const Verdict original = classify(ls.sentence);
    std::vector<Verdict> parts;
    for (const Sentence &p : simplifier(ls)) parts.push_back(classify(p));
    if (parts.empty()) parts.push_back(original);
    if (failed && policy == ErrorPolicy::kSkip) {
      ++tally.skipped;
      continue;
    }
    ++tally.sentences;
    for (int c = 0; c < 4; ++c) {
      tally.counts[c].Add(ls.gold_positive,
                          Combine(original, parts, kCategories[c]).positive);
    }
  }
}

}  // namespace

ExperimentResult RunExperiment(const std::vector<LabeledSentence> &corpus,
                               const Classifier &classifier,
                               const Simplifier &simplifier,
                               const ExperimentOptions &options) {
  if (corpus.empty()) throw EmptyInput("empty corpus");
  const size_t workers = std::clamp<size_t>(
      static_cast<size_t>(std::max(options.workers, 1)), 1, corpus.size());
  std::vector<WorkerTally> tallies(workers);
  const size_t chunk = (corpus.size() + workers - 1) / workers;
  if (workers == 1) {
    Tally(corpus, 0, corpus.size(), classifier, simplifier,
          options.error_policy, tallies[0]);
  } else {
    std::vector<std::thread> threads;
    for (size_t w = 0; w < workers; ++w) {
      const size_t begin = std::min(corpus.size(), w * chunk);
      const size_t end = std::min(corpus.size(), begin + chunk);
      threads.emplace_back(Tally, std::cref(corpus), begin, end,
                           std::cref(classifier), std::cref(simplifier),
                           options.error_policy, std::ref(tallies[w]));
    }
    for (std::thread &t : threads) t.join();
  }

  ExperimentResult result;
  ConfusionCounts merged[4];
  for (const WorkerTally &t : tallies) {
    for (int c = 0; c < 4; ++c) merged[c] += t.counts[c];
    result.sentences += t.sentences;
    result.skipped += t.skipped;
    for (const auto &[i, message] : t.warnings) result.warnings.push_back(message);
  }
  for (int c = 0; c < 4; ++c) {
    MetricRow row{kCategories[c], merged[c], ComputeMetrics(merged[c])};
    const std::string name = CategoryName(row.category);
    if (row.metrics.recall_undefined)
      result.warnings.push_back(name + ": no gold positives, recall set to 0");
    if (row.metrics.precision_undefined)
      result.warnings.push_back(name + ": no predicted positives, precision set to 0");
    result.rows.push_back(row);
  }
  return result;
}

std::string FormatMetricTable(const std::vector<MetricRow> &rows) {
  auto pct = [](double v) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%.1f%%", 100.0 * v);
    return std::string(buf);
  };
  char line[128];
  std::string out;
  std::snprintf(line, sizeof line, "%-22s | %7s | %9s | %7s\n", "Category",
                "Recall", "Precision", "f-score");
  out += line;
  for (const MetricRow &r : rows) {
    std::snprintf(line, sizeof line, "%-22s | %7s | %9s | %7s\n",
                  CategoryLabel(r.category), pct(r.metrics.recall).c_str(),
                  pct(r.metrics.precision).c_str(), pct(r.metrics.f_score).c_str());
    out += line;
  }
  return out;
}

std::string CountsRecord(const ExperimentResult &result) {
  nlohmann::ordered_json record;
  record["sentences"] = result.sentences;
  record["skipped"] = result.skipped;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const MetricRow &r : result.rows) {
    nlohmann::ordered_json row;
    row["category"] = CategoryName(r.category);
    row["tp"] = r.counts.tp;
    row["fp"] = r.counts.fp;
    row["fn"] = r.counts.fn;
    row["tn"] = r.counts.tn;
    row["recall"] = r.metrics.recall;
    row["precision"] = r.metrics.precision;
    row["f_score"] = r.metrics.f_score;
    rows.push_back(std::move(row));
  }
  record["rows"] = std::move(rows);
  return record.dump();
}

}  // namespace gramsplit
