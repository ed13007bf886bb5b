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
#include <memory>
#include <string>

namespace zsr {

/// Sequential line source over a plain or gzip-compressed file. Paths ending
/// in ".gz" are decompressed; "-" reads standard input. The trailing '\n'
/// (and a '\r' before it) is stripped from each line.
class LineReader {
 public:
  explicit LineReader(const std::string& path);
  ~LineReader();

  LineReader(const LineReader&) = delete;
  LineReader& operator=(const LineReader&) = delete;
  LineReader(LineReader&&) noexcept;
  LineReader& operator=(LineReader&&) noexcept;

  /// False at end of input. Throws zsr::Error(kIo) on read failure.
  bool next(std::string& line);

  std::size_t lines_read() const noexcept { return lines_read_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::size_t lines_read_ = 0;
};

}  // namespace zsr
