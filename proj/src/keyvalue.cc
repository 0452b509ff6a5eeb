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

#include "gramsplit/keyvalue.h"

#include <cctype>

#include "gramsplit/error.h"
#include "gramsplit/text.h"

namespace gramsplit {

std::vector<KeyValue> ReadKeyValues(std::istream &in) {
  std::vector<KeyValue> out;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string text = NormalizeWhitespace(raw);
    if (text.empty() || text[0] == '#') continue;
    size_t eq = text.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected key = value");
    KeyValue kv;
    kv.line = line;
    kv.key = NormalizeWhitespace(text.substr(0, eq));
    kv.value = NormalizeWhitespace(text.substr(eq + 1));
    if (kv.key.empty()) throw ParseError(line, "missing key");
    out.push_back(std::move(kv));
  }
  return out;
}

std::vector<std::string> SplitList(const std::string &value, int line) {
  std::vector<std::string> items;
  size_t i = 0;
  while (i < value.size()) {
    if (std::isspace(static_cast<unsigned char>(value[i]))) {
      ++i;
      continue;
    }
    if (value[i] == '"') {
      size_t close = value.find('"', i + 1);
      if (close == std::string::npos) throw ParseError(line, "unclosed quote");
      items.push_back(value.substr(i + 1, close - i - 1));
      i = close + 1;
    } else {
      size_t j = i;
      while (j < value.size() &&
             !std::isspace(static_cast<unsigned char>(value[j])))
        ++j;
      items.push_back(value.substr(i, j - i));
      i = j;
    }
  }
  return items;
}

}  // namespace gramsplit
