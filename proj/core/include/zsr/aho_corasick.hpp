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

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zsr {

/// Byte-level Aho-Corasick automaton compiled to a dense DFA.
///
/// Bytes are first mapped to equivalence classes (one class per byte value
/// that occurs in some pattern, plus class 0 for everything else), so the
/// transition table is states x classes rather than states x 256. A class-0
/// byte cannot be part of any match and always returns to the root.
///
/// Patterns must be unique and non-empty. Match callbacks receive the index
/// of the pattern in the construction list; overlapping matches are all
/// reported.
class AhoCorasick {
 public:
  AhoCorasick() = default;
  explicit AhoCorasick(std::span<const std::string> patterns);

  std::size_t pattern_count() const noexcept { return pattern_lengths_.size(); }
  std::size_t state_count() const noexcept { return terminal_.size(); }

  /// Calls `on_match(pattern_index, end_offset)` for every occurrence,
  /// where `end_offset` is one past the last byte of the occurrence.
  template <typename OnMatch>
  void scan(std::string_view text, OnMatch&& on_match) const {
    if (pattern_lengths_.empty()) return;
    int32_t state = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      const uint16_t cls = byte_class_[static_cast<uint8_t>(text[i])];
      state = cls == 0 ? 0 : delta_[static_cast<std::size_t>(state) * class_count_ + cls];
      for (int32_t s = terminal_[state] >= 0 ? state : dict_link_[state]; s > 0;
           s = dict_link_[s]) {
        on_match(static_cast<std::size_t>(terminal_[s]), i + 1);
      }
    }
  }

  /// Pattern indices of every occurrence, in scan order. Mostly for tests.
  std::vector<std::size_t> find_all(std::string_view text) const;

 private:
  std::array<uint16_t, 256> byte_class_{};
  std::size_t class_count_ = 1;
  std::vector<int32_t> delta_;      // state * class_count_ + class -> next state
  std::vector<int32_t> terminal_;   // pattern index ending exactly here, or -1
  std::vector<int32_t> dict_link_;  // nearest proper-suffix state that is terminal, or -1
  std::vector<std::size_t> pattern_lengths_;
};

}  // namespace zsr
