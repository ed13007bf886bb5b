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
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace zsr {

/// One species as listed in a name map. `common_names[0]` is the curated
/// preferred common name.
struct SpeciesRecord {
  std::string species_id;
  std::string scientific_name;
  std::vector<std::string> common_names;
  std::optional<std::string> organism_type;

  friend bool operator==(const SpeciesRecord&, const SpeciesRecord&) = default;
};

/// Throws zsr::Error(kInvalidArgument) when the record violates its invariants
/// (blank scientific name, empty or duplicate common names).
void validate(const SpeciesRecord& record);

/// Preferred common name, or the scientific name when the species has none.
const std::string& resolve_common(const SpeciesRecord& record);

/// Immutable collection of species with lookup by id and by normalized name.
class NameTable {
 public:
  NameTable() = default;

  /// Validates every record; throws DuplicateKey on repeated species ids.
  explicit NameTable(std::vector<SpeciesRecord> records);

  std::span<const SpeciesRecord> records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }

  const SpeciesRecord* find_id(std::string_view species_id) const;

  /// Species whose scientific or common name normalizes to the same string as
  /// `name`, in table order. Scientific-name matches come first.
  std::vector<const SpeciesRecord*> lookup(std::string_view name) const;

 private:
  std::vector<SpeciesRecord> records_;
  std::unordered_map<std::string, std::size_t> by_id_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_scientific_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_common_;
};

/// Parses the four-column name-map TSV
/// (`species_id \t scientific_name \t common|names \t organism_type`).
/// Lines starting with '#' and blank lines are ignored.
NameTable load_name_table(std::istream& in);
NameTable load_name_table_file(const std::string& path);

/// Inverse of load_name_table.
void write_name_table(const NameTable& table, std::ostream& out);

}  // namespace zsr
