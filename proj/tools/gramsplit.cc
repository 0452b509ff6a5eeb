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

// gramsplit: command-line front end for sentence simplification, parser
// diagnostics, GRAM scoring and the evaluation harness.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gramsplit/error.h"
#include "gramsplit/eval.h"
#include "gramsplit/gram.h"
#include "gramsplit/linkparser.h"
#include "gramsplit/pipeline.h"
#include "json.hpp"

namespace gramsplit {
namespace {

using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kIoError = 1;
constexpr int kConfigError = 2;

struct RunConfig {
  std::string lexicon_path;
  std::string gazetteer_path;
  std::string rules_path;
  std::string input_path;
  std::string output_path;
  std::optional<int> max_depth;
  std::string mode = "pipeline";
  int workers = 1;
};

class ExitError : public std::runtime_error {
 public:
  ExitError(int code, const std::string &what)
      : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

template <typename T, typename Loader>
void LoadInto(const std::string &path, const char *what, Loader load, T &out) {
  if (path.empty()) return;
  std::ifstream in(path);
  if (!in) throw ExitError(kConfigError, std::string("cannot read ") + what + " " + path);
  try {
    out = load(in);
  } catch (const Error &e) {
    throw ExitError(kConfigError, path + ": " + e.what());
  }
}

Resources LoadResources(const RunConfig &config) {
  Resources r = Resources::Defaults();
  LoadInto(config.lexicon_path, "lexicon",
           [](std::istream &in) { return Lexicon::Load(in); }, r.lexicon);
  LoadInto(config.gazetteer_path, "gazetteer",
           [](std::istream &in) { return Gazetteer::Load(in); }, r.gazetteer);
  LoadInto(config.rules_path, "rules",
           [](std::istream &in) { return LoadRuleConfig(in); }, r.rules);
  if (config.max_depth) {
    if (*config.max_depth < 0) throw ExitError(kConfigError, "--max-depth must be >= 0");
    r.rules.max_depth = *config.max_depth;
  }
  return r;
}

std::string ReadInput(const RunConfig &config) {
  if (config.input_path.empty()) throw ExitError(kConfigError, "no input given");
  std::ifstream in(config.input_path, std::ios::binary);
  if (!in) throw ExitError(kIoError, "cannot read input " + config.input_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// One sentence per non-blank line; ids are "s<line number>".
std::vector<std::pair<std::string, std::string>> InputSentences(const std::string &text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    out.emplace_back("s" + std::to_string(number), line);
  }
  return out;
}

class Output {
 public:
  explicit Output(const std::string &path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw ExitError(kIoError, "cannot write " + path);
    }
  }
  std::ostream &stream() { return file_.is_open() ? file_ : std::cout; }
  void Finish() {
    stream().flush();
    if (!stream()) throw ExitError(kIoError, "write failed");
  }

 private:
  std::ofstream file_;
};

json GramOrNull(const Sentence &sentence, const Lexicon &lexicon) {
  try {
    return ScoreSentence(sentence, lexicon).value;
  } catch (const Error &) {
    return nullptr;
  }
}

json SimplifyRecord(const std::string &id, const std::string &text,
                    const Resources &resources) {
  json record;
  record["id"] = id;
  record["original"] = text;
  try {
    SimplificationResult result =
        SimplifyPipeline(Sentence::FromText(id, text), resources);
    record["simplified"] = RestoredOutputs(result);
    json placeholders = json::object();
    for (const auto &[key, surface] : result.placeholders.entries())
      placeholders[key] = surface;
    record["placeholders"] = std::move(placeholders);
    json parts = json::array();
    for (const Sentence &out : result.outputs)
      parts.push_back(GramOrNull(out, resources.lexicon));
    record["gram"] = {{"original", GramOrNull(result.original, resources.lexicon)},
                      {"parts", std::move(parts)}};
    json trace = json::array();
    for (const TraceEntry &t : result.trace) {
      trace.push_back({{"rule", t.rule_id},
                       {"accepted", t.decision.accepted},
                       {"original_gram", t.decision.original_gram},
                       {"part_grams", t.decision.part_grams}});
    }
    record["trace"] = std::move(trace);
  } catch (const Error &e) {
    record["simplified"] = json::array();
    record["placeholders"] = json::object();
    record["gram"] = nullptr;
    record["trace"] = json::array();
    record["error"] = e.what();
  }
  return record;
}

int CmdSimplify(const RunConfig &config) {
  const Resources resources = LoadResources(config);
  const std::string text = ReadInput(config);
  Output output(config.output_path);
  for (const auto &[id, line] : InputSentences(text))
    output.stream() << SimplifyRecord(id, line, resources).dump() << '\n';
  output.Finish();
  return kOk;
}

std::vector<std::string> WordsOf(const std::string &line) {
  std::vector<std::string> words;
  for (const Token &t : Tokenize(line)) words.push_back(t.surface);
  return words;
}

int CmdParse(const RunConfig &config) {
  const Resources resources = LoadResources(config);
  const std::string text = ReadInput(config);
  Output output(config.output_path);
  bool first = true;
  for (const auto &[id, line] : InputSentences(text)) {
    std::ostream &out = output.stream();
    if (!first) out << '\n';
    first = false;
    out << id << ": " << line << '\n';
    try {
      out << FormatParse(Parse(WordsOf(line), resources.lexicon));
    } catch (const Error &e) {
      out << "error: " << e.what() << '\n';
    }
  }
  output.Finish();
  return kOk;
}

int CmdGram(const RunConfig &config) {
  const Resources resources = LoadResources(config);
  const std::string text = ReadInput(config);
  Output output(config.output_path);
  for (const auto &[id, line] : InputSentences(text)) {
    std::ostream &out = output.stream();
    try {
      GramScore score = ScoreSentence(Sentence::FromText(id, line), resources.lexicon);
      out << "GRAM=" << score.value << " (UNUSED=" << score.unused
          << " DIS=" << score.dis << ")\n";
    } catch (const Error &e) {
      out << "error: " << e.what() << '\n';
    }
  }
  output.Finish();
  return kOk;
}

int CmdEval(const RunConfig &config) {
  if (config.mode != "pipeline" && config.mode != "identity")
    throw ExitError(kConfigError, "--mode must be pipeline or identity");
  const Resources resources = LoadResources(config);
  const std::string text = ReadInput(config);
  std::vector<LabeledSentence> corpus;
  try {
    corpus = IngestCorpus(text);
  } catch (const FormatError &e) {
    throw ExitError(kIoError, config.input_path + ": " + e.what());
  }
  if (corpus.empty()) throw ExitError(kIoError, config.input_path + ": no sentences");
  MockClassifier classifier(MentionGazetteer(corpus));
  Simplifier simplifier = config.mode == "identity" ? IdentitySimplifier()
                                                    : PipelineSimplifier(resources);
  ExperimentOptions options;
  options.workers = config.workers;
  ExperimentResult result = RunExperiment(corpus, classifier, simplifier, options);
  for (const std::string &w : result.warnings) std::cerr << "warning: " << w << '\n';

  std::cout << FormatMetricTable(result.rows);
  if (config.output_path.empty()) {
    std::cout << CountsRecord(result) << '\n';
  } else {
    Output output(config.output_path);
    output.stream() << CountsRecord(result) << '\n';
    output.Finish();
  }
  return kOk;
}

void AddCommonOptions(CLI::App *cmd, RunConfig &config) {
  cmd->add_option("--lexicon", config.lexicon_path, "Link grammar dictionary");
  cmd->add_option("--gazetteer", config.gazetteer_path, "Gene gazetteer, one entry per line");
  cmd->add_option("--rules", config.rules_path, "Rule configuration file");
  cmd->add_option("--input,-i", config.input_path, "Input file")->required();
  cmd->add_option("--output,-o", config.output_path, "Output file (default stdout)");
}

int Main(int argc, char **argv) {
  CLI::App app{"Grammaticality-gated sentence simplification"};
  app.require_subcommand(1);
  RunConfig config;

  CLI::App *simplify = app.add_subcommand("simplify", "Simplify sentences to JSON lines");
  AddCommonOptions(simplify, config);
  simplify->add_option("--max-depth", config.max_depth, "Recursion depth for splitting");

  CLI::App *parse = app.add_subcommand("parse", "Print linkage diagrams");
  AddCommonOptions(parse, config);

  CLI::App *gram = app.add_subcommand("gram", "Print GRAM scores");
  AddCommonOptions(gram, config);

  CLI::App *eval = app.add_subcommand("eval", "Run the classifier experiment");
  AddCommonOptions(eval, config);
  eval->add_option("--max-depth", config.max_depth, "Recursion depth for splitting");
  eval->add_option("--mode", config.mode, "pipeline or identity");
  eval->add_option("--workers", config.workers, "Classification threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*simplify) return CmdSimplify(config);
    if (*parse) return CmdParse(config);
    if (*gram) return CmdGram(config);
    return CmdEval(config);
  } catch (const ExitError &e) {
    std::cerr << "gramsplit: " << e.what() << '\n';
    return e.code();
  } catch (const std::exception &e) {
    std::cerr << "gramsplit: " << e.what() << '\n';
    return kIoError;
  }
}

}  // namespace
}  // namespace gramsplit

int main(int argc, char **argv) { return gramsplit::Main(argc, argv); }
