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

#include "zsr/corpus_freq.hpp"

#include <charconv>
#include <fstream>
#include <thread>

#include "zsr/error.hpp"
#include "zsr/line_reader.hpp"
#include "zsr/text.hpp"

namespace zsr {

PatternSet::PatternSet(std::span<const std::string> names) {
  std::vector<std::string> forms;
  std::unordered_map<std::string, std::size_t> form_index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    std::string normalized = normalize_name(names[i]);
    if (normalized.empty()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "pattern " + std::to_string(i) + " is empty after normalization");
    }
    if (index_.count(normalized) != 0) continue;
    std::string form = token_form(normalized);
    if (form.empty()) {
      throw Error(ErrorKind::kInvalidArgument, "pattern " + std::to_string(i) + " ('" +
                                                   names[i] + "') has no word characters");
    }
    const auto id = static_cast<uint32_t>(names_.size());
    index_.emplace(normalized, id);
    names_.push_back(std::move(normalized));

    const auto [it, inserted] = form_index.emplace(form, forms.size());
    if (inserted) {
      forms.push_back(std::move(form));
      form_ids_.emplace_back();
    }
    form_ids_[it->second].push_back(id);
  }
  matcher_ = AhoCorasick(forms);
}

std::optional<std::size_t> PatternSet::id_of(std::string_view name) const {
  const auto it = index_.find(normalize_name(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FrequencyTable::FrequencyTable(std::vector<std::string> names, std::vector<uint64_t> counts,
                               uint64_t corpus_lines, uint64_t skipped_lines)
    : names_(std::move(names)),
      counts_(std::move(counts)),
      corpus_lines_(corpus_lines),
      skipped_lines_(skipped_lines) {
  if (names_.size() != counts_.size()) {
    throw Error(ErrorKind::kInvalidArgument, "frequency table names/counts length mismatch");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], i).second) {
      throw Error(ErrorKind::kDuplicateKey, "duplicate name '" + names_[i] + "'");
    }
  }
}

FrequencyTable FrequencyTable::zeros(const PatternSet& patterns) {
  return FrequencyTable(patterns.names(), std::vector<uint64_t>(patterns.size(), 0), 0, 0);
}

uint64_t FrequencyTable::count(std::string_view name) const {
  const auto it = index_.find(normalize_name(name));
  return it == index_.end() ? 0 : counts_[it->second];
}

FrequencyTable merge(const FrequencyTable& a, const FrequencyTable& b) {
  if (!a.same_universe(b)) {
    throw Error(ErrorKind::kInvalidArgument,
                "cannot merge frequency tables built over different pattern sets");
  }
  std::vector<uint64_t> counts(a.counts());
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += b.counts()[i];
  return FrequencyTable(a.names(), std::move(counts), a.corpus_lines() + b.corpus_lines(),
                        a.skipped_lines() + b.skipped_lines());
}

FrequencyCounter::FrequencyCounter(const PatternSet& patterns)
    : patterns_(&patterns), counts_(patterns.size(), 0), last_seen_(patterns.size(), 0) {}

void FrequencyCounter::add_caption(std::string_view caption) {
  if (!is_valid_utf8(caption)) {
    ++skipped_;
    return;
  }
  // last_seen_ holds the 1-based line stamp so each id counts once per caption.
  const uint64_t stamp = ++lines_;
  form_.clear();
  append_normalized_token_form(caption, form_);
  patterns_->matcher().scan(form_, [&](std::size_t form, std::size_t) {
    for (const uint32_t id : patterns_->ids_for_form(form)) {
      if (last_seen_[id] != stamp) {
        last_seen_[id] = stamp;
        ++counts_[id];
      }
    }
  });
}

FrequencyTable FrequencyCounter::table() const {
  return FrequencyTable(patterns_->names(), counts_, lines_, skipped_);
}

FrequencyTable count_occurrences(std::span<const std::string> captions,
                                 const PatternSet& patterns) {
  FrequencyCounter counter(patterns);
  for (const auto& caption : captions) counter.add_caption(caption);
  return counter.table();
}

FrequencyTable count_occurrences(std::istream& corpus, const PatternSet& patterns) {
  FrequencyCounter counter(patterns);
  std::string line;
  while (std::getline(corpus, line)) counter.add_caption(chomp(line));
  return counter.table();
}

FrequencyTable count_sharded(std::span<const std::string> captions, const PatternSet& patterns,
                             std::size_t shards) {
  if (shards <= 1 || captions.size() < 2) return count_occurrences(captions, patterns);
  std::vector<FrequencyTable> partial(shards);
  {
    std::vector<std::jthread> workers;
    workers.reserve(shards);
    const std::size_t n = captions.size();
    for (std::size_t s = 0; s < shards; ++s) {
      const std::size_t begin = n * s / shards;
      const std::size_t end = n * (s + 1) / shards;
      workers.emplace_back([&, s, begin, end] {
        partial[s] = count_occurrences(captions.subspan(begin, end - begin), patterns);
      });
    }
  }
  FrequencyTable total = FrequencyTable::zeros(patterns);
  for (const auto& t : partial) total = merge(total, t);
  return total;
}

FrequencyTable count_corpus_file(const std::string& path, const PatternSet& patterns,
                                 const CorpusOptions& options) {
  if (options.caption_column && *options.caption_column == 0) {
    throw Error(ErrorKind::kInvalidArgument, "caption column is 1-based");
  }
  const std::size_t threads = std::max<std::size_t>(1, options.threads);
  const std::size_t batch_size = std::max<std::size_t>(1, options.batch_lines);
  LineReader reader(path);
  std::vector<FrequencyCounter> counters(threads, FrequencyCounter(patterns));
  std::vector<std::string> batch;
  batch.reserve(batch_size);

  auto scan_slice = [&](FrequencyCounter& counter, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      std::string_view caption = batch[i];
      if (options.caption_column) {
        const auto fields = split(caption, '\t');
        if (fields.size() < *options.caption_column) {
          counter.add_skipped();
          continue;
        }
        caption = fields[*options.caption_column - 1];
      }
      counter.add_caption(caption);
    }
  };
  auto flush = [&] {
    if (threads == 1 || batch.size() < threads) {
      scan_slice(counters.front(), 0, batch.size());
    } else {
      std::vector<std::jthread> workers;
      const std::size_t n = batch.size();
      for (std::size_t t = 0; t < threads; ++t) {
        workers.emplace_back(
            [&, t] { scan_slice(counters[t], n * t / threads, n * (t + 1) / threads); });
      }
    }
    batch.clear();
  };

  std::string line;
  while (reader.next(line)) {
    batch.push_back(std::move(line));
    if (batch.size() == batch_size) flush();
  }
  flush();

  FrequencyTable total = FrequencyTable::zeros(patterns);
  for (const auto& c : counters) total = merge(total, c.table());
  return total;
}

std::vector<std::string> species_names(const NameTable& names) {
  std::vector<std::string> out;
  for (const auto& r : names.records()) {
    out.push_back(r.scientific_name);
    out.insert(out.end(), r.common_names.begin(), r.common_names.end());
  }
  return out;
}

Coverage coverage_report(const FrequencyTable& table, const NameTable& names) {
  Coverage c;
  c.species = names.size();
  for (const auto& r : names.records()) {
    const bool scientific = table.count(r.scientific_name) > 0;
    bool any = scientific;
    for (const auto& name : r.common_names) {
      if (any) break;
      any = table.count(name) > 0;
    }
    c.scientific += scientific ? 1 : 0;
    c.scientific_or_common += any ? 1 : 0;
  }
  return c;
}

void write_frequency_table(const FrequencyTable& table, std::ostream& out) {
  out << "# corpus_lines=" << table.corpus_lines() << '\n';
  if (table.skipped_lines() != 0) out << "# skipped_lines=" << table.skipped_lines() << '\n';
  for (std::size_t i = 0; i < table.names().size(); ++i) {
    out << table.names()[i] << '\t' << table.counts()[i] << '\n';
  }
}

namespace {

bool parse_u64(std::string_view s, uint64_t& value) {
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  return ec == std::errc() && ptr == end && !s.empty();
}

bool parse_header(std::string_view line, std::string_view key, uint64_t& value) {
  const std::string prefix = "# " + std::string(key) + "=";
  if (line.substr(0, prefix.size()) != prefix) return false;
  return parse_u64(trim(line.substr(prefix.size())), value);
}

}  // namespace

FrequencyTable read_frequency_table(std::istream& in) {
  std::vector<std::string> names;
  std::vector<uint64_t> counts;
  std::optional<uint64_t> corpus_lines;
  uint64_t skipped = 0;
  std::unordered_map<std::string, std::size_t> seen;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = chomp(raw);
    if (trim(line).empty()) continue;
    if (line.front() == '#') {
      uint64_t value = 0;
      if (parse_header(line, "corpus_lines", value)) {
        corpus_lines = value;
      } else if (parse_header(line, "skipped_lines", value)) {
        skipped = value;
      }
      continue;
    }
    const auto fields = split(line, '\t');
    uint64_t count = 0;
    if (fields.size() != 2) throw ParseError(line_no, "expected 'name<TAB>count'");
    if (!parse_u64(trim(fields[1]), count)) throw ParseError(line_no, "count is not an integer");
    std::string name = normalize_name(fields[0]);
    if (name.empty()) throw ParseError(line_no, "empty name");
    if (!seen.emplace(name, names.size()).second) {
      throw ParseError(line_no, "duplicate name '" + name + "'");
    }
    names.push_back(std::move(name));
    counts.push_back(count);
  }
  if (!corpus_lines) throw ParseError(0, "missing '# corpus_lines=<N>' header");
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > *corpus_lines) {
      throw ParseError(0, "count for '" + names[i] + "' exceeds corpus_lines");
    }
  }
  return FrequencyTable(std::move(names), std::move(counts), *corpus_lines, skipped);
}

FrequencyTable read_frequency_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open frequency table '" + path + "'");
  try {
    return read_frequency_table(in);
  } catch (const ParseError& e) {
    throw e.with_source(path);
  }
}

}  // namespace zsr
