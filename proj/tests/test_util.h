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

// Shared helpers for the test binaries.

#ifndef GRAMSPLIT_TESTS_TEST_UTIL_H_
#define GRAMSPLIT_TESTS_TEST_UTIL_H_

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gramsplit/lexicon.h"
#include "gramsplit/pipeline.h"

namespace gramsplit::testing {

inline std::string FixturePath(const std::string &name) {
  return std::string(GRAMSPLIT_FIXTURES) + "/" + name;
}

inline std::string ReadFixture(const std::string &name) {
  std::ifstream in(FixturePath(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Non-blank lines that do not start with '#'.
inline std::vector<std::string> FixtureLines(const std::string &name) {
  std::istringstream in(ReadFixture(name));
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  return lines;
}

inline Lexicon LoadLexiconText(std::string_view text) {
  std::istringstream in{std::string(text)};
  return Lexicon::Load(in);
}

inline const Resources &DefaultResources() {
  static const Resources *resources = new Resources(Resources::Defaults());
  return *resources;
}

inline std::vector<std::string> Words(std::string_view text) {
  std::vector<std::string> words;
  for (const Token &t : Tokenize(text)) words.push_back(t.surface);
  return words;
}

struct TableRow {
  int row = 0;
  std::string input;
  std::vector<std::string> reference;
  std::vector<std::string> snapshot;
};

inline std::vector<std::string> SplitParts(const std::string &field) {
  std::vector<std::string> parts;
  const std::string sep = " || ";
  size_t start = 0;
  while (true) {
    const size_t at = field.find(sep, start);
    parts.push_back(field.substr(start, at == std::string::npos ? at : at - start));
    if (at == std::string::npos) break;
    start = at + sep.size();
  }
  return parts;
}

// Rows of reference_splits.tsv: row number, input, reference parts, snapshot parts.
inline std::vector<TableRow> LoadTable() {
  std::vector<TableRow> rows;
  for (const std::string &line : FixtureLines("reference_splits.tsv")) {
    std::vector<std::string> f;
    std::stringstream in(line);
    std::string field;
    while (std::getline(in, field, '\t')) f.push_back(field);
    if (f.size() != 4) throw std::runtime_error("bad table row: " + line);
    rows.push_back(TableRow{std::stoi(f[0]), f[1], SplitParts(f[2]), SplitParts(f[3])});
  }
  return rows;
}

// Gate corpus lines plus table inputs and snapshot parts.
inline std::vector<std::string> AllFixtureText() {
  std::vector<std::string> lines = FixtureLines("gate_corpus.txt");
  for (const TableRow &row : LoadTable()) {
    lines.push_back(row.input);
    lines.insert(lines.end(), row.snapshot.begin(), row.snapshot.end());
  }
  return lines;
}

}  // namespace gramsplit::testing

#endif  // GRAMSPLIT_TESTS_TEST_UTIL_H_
