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
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "zsr/aho_corasick.hpp"
#include "zsr/taxonomy.hpp"

namespace zsr {

/// Deduplicated, normalized names compiled into a single matcher.
///
/// Pattern ids are dense (0..size()-1) in order of first appearance. A name
/// matches a caption when its word tokens occur contiguously among the
/// caption's word tokens, both sides normalized with normalize_name.
class PatternSet {
 public:
  PatternSet() = default;

  /// Throws zsr::Error(kInvalidArgument) naming the index of the first name
  /// that is empty after normalization or has no word characters.
  explicit PatternSet(std::span<const std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }

  /// Normalized names indexed by pattern id.
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<std::size_t> id_of(std::string_view name) const;

  const AhoCorasick& matcher() const noexcept { return matcher_; }

  /// Pattern ids that share the matcher entry `form`. Distinct normalized
  /// names can tokenize identically ("black-capped" / "black capped").
  std::span<const uint32_t> ids_for_form(std::size_t form) const noexcept {
    return form_ids_[form];
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<uint32_t>> form_ids_;
  AhoCorasick matcher_;
};

/// Document frequency of each name over a caption corpus.
class FrequencyTable {
 public:
  FrequencyTable() = default;

  /// `names` must be normalized and unique; `counts` parallel to `names`.
  FrequencyTable(std::vector<std::string> names, std::vector<uint64_t> counts,
                 uint64_t corpus_lines, uint64_t skipped_lines = 0);

  /// The identity element for merge() over this pattern set.
  static FrequencyTable zeros(const PatternSet& patterns);

  /// Count for `name` (normalized before lookup); 0 when not tracked.
  uint64_t count(std::string_view name) const;

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<uint64_t>& counts() const noexcept { return counts_; }

  /// Captions scanned. Lines rejected as invalid UTF-8 (or lacking the
  /// caption column) are not included; see skipped_lines().
  uint64_t corpus_lines() const noexcept { return corpus_lines_; }
  uint64_t skipped_lines() const noexcept { return skipped_lines_; }

  bool same_universe(const FrequencyTable& other) const noexcept {
    return names_ == other.names_;
  }

  friend bool operator==(const FrequencyTable& a, const FrequencyTable& b) {
    return a.names_ == b.names_ && a.counts_ == b.counts_ &&
           a.corpus_lines_ == b.corpus_lines_ && a.skipped_lines_ == b.skipped_lines_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<uint64_t> counts_;
  std::unordered_map<std::string, std::size_t> index_;
  uint64_t corpus_lines_ = 0;
  uint64_t skipped_lines_ = 0;
};

/// Pointwise sum. Throws zsr::Error(kInvalidArgument) when the two tables
/// track different names.
FrequencyTable merge(const FrequencyTable& a, const FrequencyTable& b);

/// Streaming document-frequency counter. One instance per thread.
class FrequencyCounter {
 public:
  explicit FrequencyCounter(const PatternSet& patterns);

  /// Scans one caption. Invalid UTF-8 is counted as skipped, not scanned.
  void add_caption(std::string_view caption);
  void add_skipped() noexcept { ++skipped_; }

  FrequencyTable table() const;

 private:
  const PatternSet* patterns_;
  std::vector<uint64_t> counts_;
  std::vector<uint64_t> last_seen_;
  uint64_t lines_ = 0;
  uint64_t skipped_ = 0;
  std::string form_;
};

FrequencyTable count_occurrences(std::span<const std::string> captions,
                                 const PatternSet& patterns);
FrequencyTable count_occurrences(std::istream& corpus, const PatternSet& patterns);

/// Splits `captions` into `shards` contiguous slices counted on separate
/// threads, then merges. Result equals count_occurrences for any shard count.
FrequencyTable count_sharded(std::span<const std::string> captions, const PatternSet& patterns,
                             std::size_t shards);

struct CorpusOptions {
  /// 1-based TSV column holding the caption; whole line when unset.
  std::optional<std::size_t> caption_column;
  std::size_t threads = 1;
  std::size_t batch_lines = 1u << 16;
};

/// Counts a newline-delimited corpus file (gzip when the path ends ".gz").
FrequencyTable count_corpus_file(const std::string& path, const PatternSet& patterns,
                                 const CorpusOptions& options = {});

/// Every scientific and common name in the table, in record order.
std::vector<std::string> species_names(const NameTable& names);

struct Coverage {
  std::size_t species = 0;
  std::size_t scientific = 0;            // species whose scientific name occurs
  std::size_t scientific_or_common = 0;  // species with any of its names occurring

  friend bool operator==(const Coverage&, const Coverage&) = default;
};

Coverage coverage_report(const FrequencyTable& table, const NameTable& names);

/// TSV: a `# corpus_lines=<N>` header, then `name \t count` in id order.
void write_frequency_table(const FrequencyTable& table, std::ostream& out);
FrequencyTable read_frequency_table(std::istream& in);
FrequencyTable read_frequency_table_file(const std::string& path);

}  // namespace zsr
