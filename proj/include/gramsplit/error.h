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

#ifndef GRAMSPLIT_ERROR_H_
#define GRAMSPLIT_ERROR_H_

#include <stdexcept>
#include <string>

namespace gramsplit {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyInput : public Error {
 public:
  explicit EmptyInput(const std::string &what) : Error("empty input: " + what) {}
};

class OverlapError : public Error {
 public:
  explicit OverlapError(const std::string &what) : Error("overlap: " + what) {}
};

class MissingEntry : public Error {
 public:
  explicit MissingEntry(const std::string &placeholder)
      : Error("no placeholder table entry for " + placeholder),
        placeholder_(placeholder) {}
  const std::string &placeholder() const { return placeholder_; }

 private:
  std::string placeholder_;
};

// Syntax error in a dictionary or configuration file.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string &what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class CostOverflow : public Error {
 public:
  CostOverflow(int line, int cost)
      : Error("line " + std::to_string(line) + ": disjunct cost " +
              std::to_string(cost) + " exceeds 9"),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// The scalar grammaticality encoding only preserves the (null count,
// disjunct cost) ordering while the disjunct cost stays below 10.
class EncodingAssumptionViolated : public Error {
 public:
  EncodingAssumptionViolated(int unused, int dis)
      : Error("disjunct cost " + std::to_string(dis) +
              " does not fit the one-digit encoding (UNUSED=" +
              std::to_string(unused) + ")"),
        unused_(unused),
        dis_(dis) {}
  int unused() const { return unused_; }
  int dis() const { return dis_; }

 private:
  int unused_;
  int dis_;
};

class NoAntecedent : public Error {
 public:
  explicit NoAntecedent(const std::string &what)
      : Error("no antecedent: " + what) {}
};

// Malformed annotated corpus input. Offset is a byte offset into the block.
class FormatError : public Error {
 public:
  FormatError(size_t offset, const std::string &what)
      : Error("offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

class ClassifierError : public Error {
 public:
  using Error::Error;
};

}  // namespace gramsplit

#endif  // GRAMSPLIT_ERROR_H_
