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

#include "zsr/taxonomy.hpp"

#include <fstream>
#include <unordered_set>

#include "zsr/error.hpp"
#include "zsr/text.hpp"

namespace zsr {
namespace {

bool has_control_separator(std::string_view s) {
  return s.find_first_of("\t\n\r") != std::string_view::npos;
}

void invalid(const SpeciesRecord& r, const std::string& what) {
  throw Error(ErrorKind::kInvalidArgument, "species '" + r.species_id + "': " + what);
}

}  // namespace

void validate(const SpeciesRecord& r) {
  if (trim(r.species_id).empty() || has_control_separator(r.species_id)) {
    invalid(r, "species id must be non-empty and free of tabs/newlines");
  }
  if (trim(r.scientific_name).empty()) invalid(r, "scientific name is empty");
  if (has_control_separator(r.scientific_name)) {
    invalid(r, "scientific name contains a tab or newline");
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : r.common_names) {
    const std::string key = normalize_name(name);
    if (key.empty()) invalid(r, "empty common name");
    if (has_control_separator(name) || name.find('|') != std::string::npos) {
      invalid(r, "common name '" + name + "' contains a separator character");
    }
    if (!seen.insert(key).second) invalid(r, "duplicate common name '" + name + "'");
  }
  if (r.organism_type && has_control_separator(*r.organism_type)) {
    invalid(r, "organism type contains a tab or newline");
  }
}

const std::string& resolve_common(const SpeciesRecord& record) {
  return record.common_names.empty() ? record.scientific_name : record.common_names.front();
}

NameTable::NameTable(std::vector<SpeciesRecord> records) : records_(std::move(records)) {
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const SpeciesRecord& r = records_[i];
    validate(r);
    if (!by_id_.emplace(r.species_id, i).second) {
      throw Error(ErrorKind::kDuplicateKey, "duplicate species id '" + r.species_id + "'");
    }
    by_scientific_[normalize_name(r.scientific_name)].push_back(i);
    for (const auto& name : r.common_names) by_common_[normalize_name(name)].push_back(i);
  }
}

const SpeciesRecord* NameTable::find_id(std::string_view species_id) const {
  const auto it = by_id_.find(std::string(species_id));
  return it == by_id_.end() ? nullptr : &records_[it->second];
}

std::vector<const SpeciesRecord*> NameTable::lookup(std::string_view name) const {
  const std::string key = normalize_name(name);
  std::vector<const SpeciesRecord*> out;
  std::unordered_set<std::size_t> added;
  for (const auto* index : {&by_scientific_, &by_common_}) {
    const auto it = index->find(key);
    if (it == index->end()) continue;
    for (std::size_t i : it->second) {
      if (added.insert(i).second) out.push_back(&records_[i]);
    }
  }
  return out;
}

NameTable load_name_table(std::istream& in) {
  std::vector<SpeciesRecord> records;
  std::unordered_set<std::string> ids;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = chomp(raw);
    if (trim(line).empty() || line.front() == '#') continue;

    const auto fields = split(line, '\t');
    if (fields.size() != 4) {
      throw ParseError(line_no, "expected 4 tab-separated columns, found " +
                                    std::to_string(fields.size()));
    }
    SpeciesRecord r;
    r.species_id = std::string(trim(fields[0]));
    r.scientific_name = std::string(trim(fields[1]));
    if (r.species_id.empty()) throw ParseError(line_no, "missing species id");
    if (r.scientific_name.empty()) throw ParseError(line_no, "missing scientific name");
    if (!trim(fields[2]).empty()) {
      for (std::string_view name : split(fields[2], '|')) {
        name = trim(name);
        if (name.empty()) throw ParseError(line_no, "empty entry in common-name list");
        r.common_names.emplace_back(name);
      }
    }
    if (const auto type = trim(fields[3]); !type.empty()) r.organism_type = std::string(type);

    if (!ids.insert(r.species_id).second) {
      throw Error(ErrorKind::kDuplicateKey,
                  "line " + std::to_string(line_no) + ": duplicate species id '" +
                      r.species_id + "'");
    }
    try {
      validate(r);
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
    records.push_back(std::move(r));
  }
  if (in.bad()) throw Error(ErrorKind::kIo, "read failure while loading name map");
  return NameTable(std::move(records));
}

NameTable load_name_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open name map '" + path + "'");
  try {
    return load_name_table(in);
  } catch (const ParseError& e) {
    throw e.with_source(path);
  }
}

void write_name_table(const NameTable& table, std::ostream& out) {
  for (const auto& r : table.records()) {
    out << r.species_id << '\t' << r.scientific_name << '\t';
    for (std::size_t i = 0; i < r.common_names.size(); ++i) {
      if (i) out << '|';
      out << r.common_names[i];
    }
    out << '\t' << r.organism_type.value_or("") << '\n';
  }
}

}  // namespace zsr
