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

#include "zsr/line_reader.hpp"

#include <zlib.h>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "zsr/error.hpp"

namespace zsr {

struct LineReader::Impl {
  std::string path;
  gzFile gz = nullptr;
  std::ifstream file;
  std::istream* stream = nullptr;
  std::string buffer;
  std::size_t pos = 0;
  bool eof = false;

  ~Impl() {
    if (gz != nullptr) gzclose(gz);
  }

  // Refills `buffer` from the gzip stream; false once exhausted.
  bool fill() {
    constexpr unsigned kChunk = 1u << 16;
    buffer.erase(0, pos);
    pos = 0;
    const std::size_t old = buffer.size();
    buffer.resize(old + kChunk);
    const int got = gzread(gz, buffer.data() + old, kChunk);
    if (got < 0) {
      int errnum = 0;
      const char* msg = gzerror(gz, &errnum);
      throw Error(ErrorKind::kIo, "gzip read error in '" + path + "': " + msg);
    }
    buffer.resize(old + static_cast<std::size_t>(got));
    return got > 0;
  }

  bool next_gz(std::string& line) {
    while (true) {
      const std::size_t nl = buffer.find('\n', pos);
      if (nl != std::string::npos) {
        line.assign(buffer, pos, nl - pos);
        pos = nl + 1;
        return true;
      }
      if (eof || !fill()) {
        eof = true;
        if (pos >= buffer.size()) return false;
        line.assign(buffer, pos, std::string::npos);
        pos = buffer.size();
        return true;
      }
    }
  }
};

LineReader::LineReader(const std::string& path) : impl_(std::make_unique<Impl>()) {
  impl_->path = path;
  const bool gz = path.size() > 3 && path.compare(path.size() - 3, 3, ".gz") == 0;
  if (gz) {
    impl_->gz = gzopen(path.c_str(), "rb");
    if (impl_->gz == nullptr) throw Error(ErrorKind::kIo, "cannot open '" + path + "'");
    gzbuffer(impl_->gz, 1u << 17);
  } else if (path == "-") {
    impl_->stream = &std::cin;
  } else {
    impl_->file.open(path, std::ios::binary);
    if (!impl_->file) throw Error(ErrorKind::kIo, "cannot open '" + path + "'");
    impl_->stream = &impl_->file;
  }
}

LineReader::~LineReader() = default;
LineReader::LineReader(LineReader&&) noexcept = default;
LineReader& LineReader::operator=(LineReader&&) noexcept = default;

bool LineReader::next(std::string& line) {
  bool got;
  if (impl_->gz != nullptr) {
    got = impl_->next_gz(line);
  } else {
    got = static_cast<bool>(std::getline(*impl_->stream, line));
    if (!got && impl_->stream->bad()) {
      throw Error(ErrorKind::kIo, "read error in '" + impl_->path + "'");
    }
  }
  if (!got) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  ++lines_read_;
  return true;
}

}  // namespace zsr
