// Copyright 2026 The zsr Authors.
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zsr {

/// Coarse error categories. The CLI maps each one to a distinct exit code.
enum class ErrorKind {
  kParse,          // malformed text input (name maps, TSVs, JSON-lines)
  kDuplicateKey,   // a key that must be unique appeared twice
  kFormat,         // malformed binary embedding file or sidecar
  kIo,             // unreadable or unwritable path
  kConfig,         // inconsistent options (e.g. f-name without frequencies)
  kDimension,      // vector dimensions disagree
  kIdMismatch,     // identifiers across inputs do not line up
  kMetric,         // metric undefined for the given inputs
  kInvalidArgument,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised for text inputs; carries the 1-based line number when known (0 otherwise).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& detail, const std::string& source = {});

  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

  /// Same error, attributed to a named input (usually a file path).
  ParseError with_source(const std::string& source) const {
    return ParseError(line_, detail_, source);
  }

 private:
  std::size_t line_;
  std::string detail_;
};

}  // namespace zsr
