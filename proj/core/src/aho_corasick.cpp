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

#include "zsr/aho_corasick.hpp"

#include <unordered_set>

#include "zsr/error.hpp"

namespace zsr {

AhoCorasick::AhoCorasick(std::span<const std::string> patterns) {
  std::unordered_set<std::string_view> unique;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    if (patterns[i].empty()) {
      throw Error(ErrorKind::kInvalidArgument, "empty pattern at index " + std::to_string(i));
    }
    if (!unique.insert(patterns[i]).second) {
      throw Error(ErrorKind::kInvalidArgument, "duplicate pattern at index " + std::to_string(i));
    }
  }

  uint16_t next_class = 1;
  for (const auto& p : patterns) {
    for (unsigned char c : p) {
      if (byte_class_[c] == 0) byte_class_[c] = next_class++;
    }
  }
  class_count_ = next_class;

  auto add_state = [this] {
    delta_.resize(delta_.size() + class_count_, -1);
    terminal_.push_back(-1);
    dict_link_.push_back(-1);
    return static_cast<int32_t>(terminal_.size() - 1);
  };
  add_state();

  pattern_lengths_.reserve(patterns.size());
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    int32_t state = 0;
    for (unsigned char c : patterns[i]) {
      const std::size_t slot = static_cast<std::size_t>(state) * class_count_ + byte_class_[c];
      if (delta_[slot] < 0) {
        const int32_t child = add_state();
        delta_[slot] = child;  // delta_ may have been reallocated; index again
      }
      state = delta_[slot];
    }
    terminal_[state] = static_cast<int32_t>(i);
    pattern_lengths_.push_back(patterns[i].size());
  }

  // Breadth-first completion of the goto function into a DFA. A state's
  // failure target is always shallower, so its row is final when needed.
  std::vector<int32_t> fail(terminal_.size(), 0);
  std::vector<int32_t> queue;
  queue.reserve(terminal_.size());
  for (std::size_t c = 1; c < class_count_; ++c) {
    int32_t& next = delta_[c];
    if (next < 0) {
      next = 0;
    } else {
      fail[next] = 0;
      queue.push_back(next);
    }
  }
  delta_[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int32_t u = queue[head];
    const std::size_t row = static_cast<std::size_t>(u) * class_count_;
    const std::size_t fail_row = static_cast<std::size_t>(fail[u]) * class_count_;
    delta_[row] = 0;
    for (std::size_t c = 1; c < class_count_; ++c) {
      int32_t& next = delta_[row + c];
      if (next < 0) {
        next = delta_[fail_row + c];
        continue;
      }
      const int32_t f = delta_[fail_row + c];
      fail[next] = f;
      dict_link_[next] = terminal_[f] >= 0 ? f : dict_link_[f];
      queue.push_back(next);
    }
  }
}

std::vector<std::size_t> AhoCorasick::find_all(std::string_view text) const {
  std::vector<std::size_t> hits;
  scan(text, [&](std::size_t pattern, std::size_t) { hits.push_back(pattern); });
  return hits;
}

}  // namespace zsr
