// Copyright 2026 The ExLibris Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace exlibris {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised by the term reader. Line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(std::string message, int line, int column, std::string file = {})
      : Error(format(file, line, column, message)),
        message_(std::move(message)),
        line_(line),
        column_(column),
        file_(std::move(file)) {}

  const std::string& message() const { return message_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& file() const { return file_; }

  SyntaxError with_file(std::string file) const {
    return SyntaxError(message_, line_, column_, std::move(file));
  }

 private:
  static std::string format(const std::string& file, int line, int column,
                            const std::string& message) {
    std::string out = file.empty() ? std::string() : file + ":";
    out += std::to_string(line) + ":" + std::to_string(column) + ": " + message;
    return out;
  }

  std::string message_;
  int line_;
  int column_;
  std::string file_;
};

/// A directive ExLibris understands was given arguments it cannot decode.
struct MalformedDirective : Error {
  using Error::Error;
};

/// An engine condition term that does not fit the condition grammar.
struct MalformedCondition : Error {
  using Error::Error;
};

struct IoError : Error {
  IoError(const std::string& what, std::string path)
      : Error(path + ": " + what), path(std::move(path)) {}
  std::string path;
};

struct ExportError : Error {
  using Error::Error;
};

}  // namespace exlibris
