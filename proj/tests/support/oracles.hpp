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

// Brute-force reference implementations used to check the optimized paths.
// They share only normalize_name, is_valid_utf8 and the embedding container
// with the library.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zsr/embeddings.hpp"
#include "zsr/text.hpp"

namespace zsr::testing {

/// Splits normalized text into word tokens. Bytes >= 0x80 count as word
/// bytes, so this agrees with the library only on corpora whose non-ASCII
/// characters are letters.
inline std::vector<std::string> naive_tokens(std::string_view raw) {
  const std::string norm = normalize_name(raw);
  std::vector<std::string> tokens;
  std::string current;
  for (unsigned char c : norm) {
    const bool word = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c >= 0x80;
    if (word) {
      current.push_back(static_cast<char>(c));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

inline bool contains_run(const std::vector<std::string>& haystack,
                         const std::vector<std::string>& needle) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
    bool all = true;
    for (std::size_t k = 0; k < needle.size() && all; ++k) all = haystack[i + k] == needle[k];
    if (all) return true;
  }
  return false;
}

/// Per-line scan: counts[j] = number of valid lines containing names[j].
struct NaiveCounts {
  std::vector<uint64_t> counts;
  uint64_t lines = 0;
  uint64_t skipped = 0;
};

inline NaiveCounts naive_document_frequency(std::span<const std::string> corpus,
                                            std::span<const std::string> names) {
  std::vector<std::vector<std::string>> needles;
  for (const auto& n : names) needles.push_back(naive_tokens(n));
  NaiveCounts out;
  out.counts.assign(names.size(), 0);
  for (const auto& line : corpus) {
    if (!is_valid_utf8(line)) {
      ++out.skipped;
      continue;
    }
    ++out.lines;
    const auto tokens = naive_tokens(line);
    for (std::size_t j = 0; j < needles.size(); ++j) {
      if (contains_run(tokens, needles[j])) ++out.counts[j];
    }
  }
  return out;
}

/// Double loop over every prompt row: mean dot product per class.
inline std::vector<double> naive_scores(std::span<const float> image,
                                        const std::vector<std::vector<std::vector<float>>>& classes) {
  std::vector<double> scores;
  for (const auto& prompts : classes) {
    double total = 0.0;
    for (const auto& p : prompts) {
      double dot = 0.0;
      for (std::size_t d = 0; d < p.size(); ++d) dot += static_cast<double>(p[d]) * image[d];
      total += dot;
    }
    scores.push_back(total / static_cast<double>(prompts.size()));
  }
  return scores;
}

inline std::size_t naive_argmax(const std::vector<double>& scores) {
  double top = scores.front();
  for (double s : scores) top = std::max(top, s);
  for (std::size_t k = 0; k < scores.size(); ++k) {
    if (scores[k] == top) return k;
  }
  return 0;
}

}  // namespace zsr::testing
