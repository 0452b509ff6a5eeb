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

#ifndef GRAMSPLIT_KEYVALUE_H_
#define GRAMSPLIT_KEYVALUE_H_

#include <istream>
#include <string>
#include <vector>

namespace gramsplit {

// One "key = value" line of a configuration file.
struct KeyValue {
  int line = 0;
  std::string key;
  std::string value;
};

// Reads "key = value" lines. Blank lines and lines starting with '#' are
// skipped; whitespace around keys and values is trimmed. A non-blank line
// without '=' raises ParseError.
std::vector<KeyValue> ReadKeyValues(std::istream &in);

// Splits a value on whitespace; double-quoted items may contain spaces.
std::vector<std::string> SplitList(const std::string &value, int line);

}  // namespace gramsplit

#endif  // GRAMSPLIT_KEYVALUE_H_
