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

#include "zsr/prompts.hpp"

#include <array>
#include <fstream>

#include <nlohmann/json.hpp>
#include "zsr/error.hpp"
#include "zsr/text.hpp"

namespace zsr {

std::string_view to_string(NameChoice choice) {
  switch (choice) {
    case NameChoice::kScientific: return "s-name";
    case NameChoice::kCommon: return "c-name";
    case NameChoice::kFrequent: return "f-name";
  }
  return "unknown";
}

std::string to_string(const Strategy& strategy) {
  std::string out(to_string(strategy.name_choice));
  if (strategy.with_descriptions) out += "+descriptions";
  return out;
}

std::optional<NameChoice> parse_name_choice(std::string_view text) {
  if (text == "s-name") return NameChoice::kScientific;
  if (text == "c-name") return NameChoice::kCommon;
  if (text == "f-name") return NameChoice::kFrequent;
  return std::nullopt;
}

std::optional<Strategy> parse_strategy(std::string_view text) {
  constexpr std::string_view kSuffix = "+descriptions";
  Strategy s;
  if (text.size() > kSuffix.size() && text.substr(text.size() - kSuffix.size()) == kSuffix) {
    s.with_descriptions = true;
    text.remove_suffix(kSuffix.size());
  }
  const auto choice = parse_name_choice(text);
  if (!choice) return std::nullopt;
  s.name_choice = *choice;
  return s;
}

std::span<const Strategy> all_strategies() {
  static constexpr std::array<Strategy, 6> kAll = {{
      {NameChoice::kScientific, false},
      {NameChoice::kScientific, true},
      {NameChoice::kCommon, false},
      {NameChoice::kCommon, true},
      {NameChoice::kFrequent, false},
      {NameChoice::kFrequent, true},
  }};
  return kAll;
}

void DescriptionStore::add(std::string species_id, std::string description) {
  if (trim(description).empty()) {
    throw Error(ErrorKind::kInvalidArgument, "empty description for '" + species_id + "'");
  }
  by_species_[std::move(species_id)].push_back(std::move(description));
}

std::span<const std::string> DescriptionStore::find(std::string_view species_id) const {
  const auto it = by_species_.find(std::string(species_id));
  if (it == by_species_.end()) return {};
  return it->second;
}

DescriptionStore load_descriptions(std::istream& in) {
  DescriptionStore store;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = chomp(raw);
    if (trim(line).empty() || line.front() == '#') continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 2) {
      throw ParseError(line_no, "expected 'species_id<TAB>description', found " +
                                    std::to_string(fields.size()) + " columns");
    }
    const auto id = trim(fields[0]);
    const auto description = trim(fields[1]);
    if (id.empty()) throw ParseError(line_no, "missing species id");
    if (description.empty()) throw ParseError(line_no, "empty description");
    store.add(std::string(id), std::string(description));
  }
  return store;
}

DescriptionStore load_descriptions_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open descriptions '" + path + "'");
  try {
    return load_descriptions(in);
  } catch (const ParseError& e) {
    throw e.with_source(path);
  }
}

const std::string& select_name(const Strategy& strategy, const SpeciesRecord& record,
                               const FrequencyTable* freq) {
  switch (strategy.name_choice) {
    case NameChoice::kScientific:
      return record.scientific_name;
    case NameChoice::kCommon:
      return resolve_common(record);
    case NameChoice::kFrequent:
      break;
  }
  if (freq == nullptr) {
    throw Error(ErrorKind::kConfig, "f-name strategy requires a frequency table");
  }
  if (record.common_names.empty()) return record.scientific_name;
  const std::string& common = record.common_names.front();
  // Ties go to the common name.
  return freq->count(record.scientific_name) > freq->count(common) ? record.scientific_name
                                                                   : common;
}

std::string build_photo_prompt(std::string_view name) {
  return build_photo_prompt(name, kDefaultPhotoTemplate);
}

std::string build_photo_prompt(std::string_view name, std::string_view photo_template) {
  constexpr std::string_view kSlot = "{name}";
  if (name.empty()) throw Error(ErrorKind::kInvalidArgument, "empty name in photo prompt");
  if (photo_template.find(kSlot) == std::string_view::npos) {
    throw Error(ErrorKind::kConfig, "prompt template must contain {name}");
  }
  std::string out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t hit = photo_template.find(kSlot, pos);
    if (hit == std::string_view::npos) break;
    out.append(photo_template.substr(pos, hit - pos));
    out.append(name);
    pos = hit + kSlot.size();
  }
  out.append(photo_template.substr(pos));
  return out;
}

std::string build_description_prompt(std::string_view name, std::string_view description) {
  if (name.empty() || description.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "description prompt needs a name and a description");
  }
  std::string out;
  out.reserve(name.size() + description.size() + 6);
  out.append(name).append(" has ").append(description).push_back('.');
  return out;
}

PromptSet build_prompt_set(const SpeciesRecord& record, const Strategy& strategy,
                           const DescriptionStore& descriptions, const FrequencyTable* freq,
                           const PromptOptions& options) {
  const std::string& name = select_name(strategy, record, freq);
  PromptSet set{record.species_id, {build_photo_prompt(name, options.photo_template)}};
  if (!strategy.with_descriptions) return set;

  const std::string& described =
      strategy.name_choice == NameChoice::kFrequent &&
              options.frequent_description_name == FrequentDescriptionName::kScientific
          ? record.scientific_name
          : name;
  for (const auto& d : descriptions.find(record.species_id)) {
    set.prompts.push_back(build_description_prompt(described, d));
  }
  return set;
}

std::vector<PromptSet> build_prompt_sets(const NameTable& names, const Strategy& strategy,
                                         const DescriptionStore& descriptions,
                                         const FrequencyTable* freq,
                                         const PromptOptions& options) {
  std::vector<PromptSet> out;
  out.reserve(names.size());
  for (const auto& r : names.records()) {
    out.push_back(build_prompt_set(r, strategy, descriptions, freq, options));
  }
  return out;
}

void write_prompt_sets(std::span<const PromptSet> sets, std::ostream& out) {
  for (const auto& s : sets) {
    nlohmann::ordered_json j;
    j["species_id"] = s.species_id;
    j["prompts"] = s.prompts;
    out << j.dump() << '\n';
  }
}

std::vector<PromptSet> read_prompt_sets(std::istream& in) {
  std::vector<PromptSet> sets;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (trim(raw).empty()) continue;
    try {
      const auto j = nlohmann::json::parse(raw);
      PromptSet s{j.at("species_id").get<std::string>(),
                  j.at("prompts").get<std::vector<std::string>>()};
      if (s.prompts.empty()) throw ParseError(line_no, "empty prompts array");
      sets.push_back(std::move(s));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return sets;
}

}  // namespace zsr
