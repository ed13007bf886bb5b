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

#include "zsr/error.hpp"

namespace zsr {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kDuplicateKey: return "duplicate-key";
    case ErrorKind::kFormat: return "format";
    case ErrorKind::kIo: return "io";
    case ErrorKind::kConfig: return "config";
    case ErrorKind::kDimension: return "dimension";
    case ErrorKind::kIdMismatch: return "id-mismatch";
    case ErrorKind::kMetric: return "metric";
    case ErrorKind::kInvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

namespace {

std::string locate(std::size_t line, const std::string& source) {
  if (source.empty()) return line == 0 ? std::string() : "line " + std::to_string(line) + ": ";
  return line == 0 ? source + ": " : source + ":" + std::to_string(line) + ": ";
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& detail, const std::string& source)
    : Error(ErrorKind::kParse, locate(line, source) + detail), line_(line), detail_(detail) {}

}  // namespace zsr
