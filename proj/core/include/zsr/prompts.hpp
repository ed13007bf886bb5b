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

#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "zsr/corpus_freq.hpp"
#include "zsr/taxonomy.hpp"

namespace zsr {

enum class NameChoice { kScientific, kCommon, kFrequent };

struct Strategy {
  NameChoice name_choice = NameChoice::kScientific;
  bool with_descriptions = false;

  friend bool operator==(const Strategy&, const Strategy&) = default;
};

/// "s-name", "c-name", "f-name", optionally suffixed "+descriptions".
std::string to_string(const Strategy& strategy);
std::string_view to_string(NameChoice choice);
std::optional<NameChoice> parse_name_choice(std::string_view text);
std::optional<Strategy> parse_strategy(std::string_view text);

/// The six configurations in benchmark-table order.
std::span<const Strategy> all_strategies();

/// Per-species descriptions ("a blue tail"), insertion order preserved.
class DescriptionStore {
 public:
  void add(std::string species_id, std::string description);

  /// Empty span for species without descriptions.
  std::span<const std::string> find(std::string_view species_id) const;

  std::size_t species_count() const noexcept { return by_species_.size(); }

 private:
  std::unordered_map<std::string, std::vector<std::string>> by_species_;
};

/// Two-column TSV `species_id \t description`; '#' lines are comments.
DescriptionStore load_descriptions(std::istream& in);
DescriptionStore load_descriptions_file(const std::string& path);

inline constexpr std::string_view kDefaultPhotoTemplate = "Here is a photo of the {name}.";

/// Which name description prompts use under f-name.
enum class FrequentDescriptionName {
  kSelected,    // same name as the photo prompt
  kScientific,  // always the scientific name, whatever the photo prompt uses
};

struct PromptOptions {
  /// Must contain "{name}"; every occurrence is substituted.
  std::string photo_template = std::string(kDefaultPhotoTemplate);
  FrequentDescriptionName frequent_description_name = FrequentDescriptionName::kSelected;
};

/// Throws zsr::Error(kConfig) when the strategy is f-name and `freq` is null.
const std::string& select_name(const Strategy& strategy, const SpeciesRecord& record,
                               const FrequencyTable* freq);

/// "Here is a photo of the <name>."
std::string build_photo_prompt(std::string_view name);
std::string build_photo_prompt(std::string_view name, std::string_view photo_template);

/// "<name> has <description>."
std::string build_description_prompt(std::string_view name, std::string_view description);

struct PromptSet {
  std::string species_id;
  std::vector<std::string> prompts;

  friend bool operator==(const PromptSet&, const PromptSet&) = default;
};

/// The photo prompt for the selected name, followed (when the strategy asks
/// for descriptions and the species has any) by one description prompt per
/// description.
PromptSet build_prompt_set(const SpeciesRecord& record, const Strategy& strategy,
                           const DescriptionStore& descriptions, const FrequencyTable* freq,
                           const PromptOptions& options = {});

std::vector<PromptSet> build_prompt_sets(const NameTable& names, const Strategy& strategy,
                                         const DescriptionStore& descriptions,
                                         const FrequencyTable* freq,
                                         const PromptOptions& options = {});

/// JSON-lines, one `{"species_id": ..., "prompts": [...]}` object per line.
void write_prompt_sets(std::span<const PromptSet> sets, std::ostream& out);
std::vector<PromptSet> read_prompt_sets(std::istream& in);

}  // namespace zsr
