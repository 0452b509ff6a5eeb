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

#ifndef GRAMSPLIT_EVAL_H_
#define GRAMSPLIT_EVAL_H_

#include <functional>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "gramsplit/entity.h"
#include "gramsplit/text.h"

namespace gramsplit {

struct Resources;

struct LabeledSentence {
  Sentence sentence;
  bool gold_positive = false;
  std::vector<EntityMention> protein_mentions;
};

// Reads an annotated corpus: abstracts separated by blank lines, protein
// mentions wrapped in <prot>...</prot>, interacting pairs marked by a shared
// id, <prot pair=ID> (several ids may be given as pair=1,2). A sentence is
// gold positive when it holds both mentions of at least one pair. Throws
// FormatError with the byte offset into the input on malformed or
// unbalanced tags.
std::vector<LabeledSentence> IngestCorpus(std::string_view text);
std::vector<LabeledSentence> IngestCorpus(std::istream &in);

// Surfaces of every gold mention in the corpus.
Gazetteer MentionGazetteer(const std::vector<LabeledSentence> &corpus);

enum class Confidence { kNone, kModerate, kHigh };

struct Verdict {
  bool positive = false;
  Confidence confidence = Confidence::kNone;

  static Verdict Of(Confidence confidence) {
    return Verdict{confidence != Confidence::kNone, confidence};
  }
  bool operator==(const Verdict &) const = default;
};

// Sentence in, verdict out. Implementations signal failure with
// ClassifierError and must be safe to call from several threads.
class Classifier {
 public:
  virtual ~Classifier() = default;
  virtual Verdict Classify(const Sentence &sentence) const = 0;
};

// Positive when the sentence holds at least two entities (placeholders or
// gazetteer entries) and a trigger word; high confidence when a trigger sits
// between two entities, moderate otherwise.
class MockClassifier : public Classifier {
 public:
  explicit MockClassifier(Gazetteer entities = {},
                          std::vector<std::string> triggers = DefaultTriggers());

  Verdict Classify(const Sentence &sentence) const override;

  static std::vector<std::string> DefaultTriggers();

 private:
  Gazetteer entities_;
  std::vector<std::string> triggers_;
};

enum class Category { kBefore, kAfter, kAndComb, kOrComb };

// "before", "after", "and_comb", "or_comb".
const char *CategoryName(Category category);
// "Before simplification", ..., "OR combination".
const char *CategoryLabel(Category category);

// Verdict for one sentence under a combination mode. The simplified
// version is positive when any of its parts is. Throws EmptyInput when parts
// is empty for any mode other than kBefore.
Verdict Combine(const Verdict &original, const std::vector<Verdict> &parts,
                Category mode);

struct ConfusionCounts {
  long tp = 0;
  long fp = 0;
  long fn = 0;
  long tn = 0;

  void Add(bool gold, bool predicted);
  long total() const { return tp + fp + fn + tn; }
  ConfusionCounts &operator+=(const ConfusionCounts &other);
  bool operator==(const ConfusionCounts &) const = default;
};

struct Metrics {
  double recall = 0;
  double precision = 0;
  double f_score = 0;
  // Set when a denominator was zero and the value defaulted to 0.
  bool recall_undefined = false;
  bool precision_undefined = false;
};

Metrics ComputeMetrics(const ConfusionCounts &counts);

struct MetricRow {
  Category category = Category::kBefore;
  ConfusionCounts counts;
  Metrics metrics;
};

// Maps a labeled sentence to its simplified parts.
using Simplifier =
    std::function<std::vector<Sentence>(const LabeledSentence &)>;

Simplifier IdentitySimplifier();

// The full pipeline with the sentence's gold mentions as the gene
// recognizer; outputs come back with gene names restored. A sentence the
// pipeline cannot handle is kept whole.
Simplifier PipelineSimplifier(const Resources &resources);

enum class ErrorPolicy { kNegative, kSkip };

struct ExperimentOptions {
  ErrorPolicy error_policy = ErrorPolicy::kNegative;
  int workers = 1;
};

struct ExperimentResult {
  // Before, after, AND, OR.
  std::vector<MetricRow> rows;
  long sentences = 0;
  long skipped = 0;
  std::vector<std::string> warnings;
};

// Classifies every original sentence and its simplified parts and counts the
// four categories. Throws EmptyInput on an empty corpus.
ExperimentResult RunExperiment(const std::vector<LabeledSentence> &corpus,
                               const Classifier &classifier,
                               const Simplifier &simplifier,
                               const ExperimentOptions &options = {});

// Aligned text table with Category, Recall, Precision and f-score columns.
std::string FormatMetricTable(const std::vector<MetricRow> &rows);

// Single-line JSON record with raw counts and metrics per category.
std::string CountsRecord(const ExperimentResult &result);

}  // namespace gramsplit

#endif  // GRAMSPLIT_EVAL_H_
