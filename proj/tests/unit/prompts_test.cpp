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

#include <gtest/gtest.h>

#include <sstream>

#include "synthetic.hpp"
#include "zsr/corpus_freq.hpp"
#include "zsr/error.hpp"
#include "zsr/prompts.hpp"
#include "zsr/text.hpp"

#ifndef ZSR_TEST_DATA_DIR
#error "ZSR_TEST_DATA_DIR must be defined"
#endif

namespace zsr {
namespace {

const Strategy kS{NameChoice::kScientific, false};
const Strategy kC{NameChoice::kCommon, false};
const Strategy kF{NameChoice::kFrequent, false};
const Strategy kSD{NameChoice::kScientific, true};
const Strategy kCD{NameChoice::kCommon, true};
const Strategy kFD{NameChoice::kFrequent, true};

SpeciesRecord magpie() { return {"aves_001", "Pica pica", {"common magpie"}, "birds"}; }

DescriptionStore blue_tail() {
  DescriptionStore d;
  d.add("aves_001", "a blue tail");
  return d;
}

FrequencyTable freq_of(std::vector<std::pair<std::string, uint64_t>> rows, uint64_t lines = 100) {
  std::vector<std::string> names;
  std::vector<uint64_t> counts;
  for (auto& [n, c] : rows) {
    names.push_back(normalize_name(n));
    counts.push_back(c);
  }
  return FrequencyTable(std::move(names), std::move(counts), lines);
}

TEST(PhotoPrompt, ByteExact) {
  EXPECT_EQ(build_photo_prompt("Pica pica"), "Here is a photo of the Pica pica.");
  EXPECT_EQ(build_photo_prompt("common magpie"), "Here is a photo of the common magpie.");
  EXPECT_EQ(build_photo_prompt("mountain hare"), "Here is a photo of the mountain hare.");
  EXPECT_THROW(build_photo_prompt(""), Error);
}

TEST(PhotoPrompt, CustomTemplate) {
  EXPECT_EQ(build_photo_prompt("Pica pica", "a photo of {name}"), "a photo of Pica pica");
  EXPECT_EQ(build_photo_prompt("x", "{name}/{name}"), "x/x");
  try {
    build_photo_prompt("x", "no slot");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kConfig);
  }
}

TEST(DescriptionPrompt, ByteExact) {
  EXPECT_EQ(build_description_prompt("Pica pica", "a blue tail"), "Pica pica has a blue tail.");
  EXPECT_EQ(build_description_prompt("common magpie", "a blue tail"),
            "common magpie has a blue tail.");
  EXPECT_EQ(build_description_prompt("x", "y"), "x has y.");
  EXPECT_THROW(build_description_prompt("", "y"), Error);
  EXPECT_THROW(build_description_prompt("x", ""), Error);
}

TEST(SelectName, ScientificAndCommon) {
  EXPECT_EQ(select_name(kS, magpie(), nullptr), "Pica pica");
  EXPECT_EQ(select_name(kC, magpie(), nullptr), "common magpie");
  const SpeciesRecord bare{"aves_002", "Ponana Citrina", {}, std::nullopt};
  EXPECT_EQ(select_name(kC, bare, nullptr), "Ponana Citrina");
}

TEST(SelectName, FrequentPicksHigherCountAndTiesGoToCommon) {
  const auto sci_wins = freq_of({{"pica pica", 90}, {"common magpie", 10}});
  EXPECT_EQ(select_name(kF, magpie(), &sci_wins), "Pica pica");
  const auto common_wins = freq_of({{"pica pica", 10}, {"common magpie", 90}});
  EXPECT_EQ(select_name(kF, magpie(), &common_wins), "common magpie");
  const auto tie = freq_of({{"pica pica", 7}, {"common magpie", 7}});
  EXPECT_EQ(select_name(kF, magpie(), &tie), "common magpie");
  const auto untracked = freq_of({});
  EXPECT_EQ(select_name(kF, magpie(), &untracked), "common magpie");
}

TEST(SelectName, FrequentWithoutCommonNamesUsesScientific) {
  const SpeciesRecord bare{"aves_002", "Ponana Citrina", {}, std::nullopt};
  const auto f = freq_of({{"ponana citrina", 0}});
  EXPECT_EQ(select_name(kF, bare, &f), "Ponana Citrina");
}

TEST(SelectName, FrequentWithoutTableIsConfigError) {
  try {
    select_name(kF, magpie(), nullptr);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kConfig);
  }
}

TEST(PromptSet, MagpieExamples) {
  const auto d = blue_tail();
  const auto f = freq_of({{"pica pica", 10}, {"common magpie", 90}});
  EXPECT_EQ(build_prompt_set(magpie(), kS, d, nullptr).prompts,
            std::vector<std::string>{"Here is a photo of the Pica pica."});
  EXPECT_EQ(build_prompt_set(magpie(), kSD, d, nullptr).prompts,
            (std::vector<std::string>{"Here is a photo of the Pica pica.",
                                      "Pica pica has a blue tail."}));
  EXPECT_EQ(build_prompt_set(magpie(), kCD, d, nullptr).prompts,
            (std::vector<std::string>{"Here is a photo of the common magpie.",
                                      "common magpie has a blue tail."}));
  EXPECT_EQ(build_prompt_set(magpie(), kFD, d, &f).prompts,
            (std::vector<std::string>{"Here is a photo of the common magpie.",
                                      "common magpie has a blue tail."}));
  PromptOptions mixed;
  mixed.frequent_description_name = FrequentDescriptionName::kScientific;
  EXPECT_EQ(build_prompt_set(magpie(), kFD, d, &f, mixed).prompts,
            (std::vector<std::string>{"Here is a photo of the common magpie.",
                                      "Pica pica has a blue tail."}));
  // The compatibility option only affects f-name.
  EXPECT_EQ(build_prompt_set(magpie(), kCD, d, nullptr, mixed).prompts[1],
            "common magpie has a blue tail.");
}

TEST(PromptSet, SizeIsOnePlusDescriptions) {
  DescriptionStore d;
  d.add("aves_001", "a blue tail");
  d.add("aves_001", "a black head");
  EXPECT_EQ(build_prompt_set(magpie(), kCD, d, nullptr).prompts.size(), 3u);
  EXPECT_EQ(build_prompt_set(magpie(), kC, d, nullptr).prompts.size(), 1u);
  const auto f = freq_of({});
  const SpeciesRecord other{"aves_009", "Ciconia nigra", {"black stork"}, "birds"};
  EXPECT_EQ(build_prompt_set(other, kFD, d, &f).prompts.size(), 1u);
}

TEST(PromptSet, ScientificIgnoresFrequencyAndDescriptions) {
  testing::Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const auto names = testing::random_names(4, rng);
    const SpeciesRecord r{"x", names[0], {names[1], names[2]}, std::nullopt};
    const auto freq = freq_of({{names[0], rng() % 50}, {names[1], rng() % 50}});
    DescriptionStore d;
    d.add("x", names[3]);
    EXPECT_EQ(build_prompt_set(r, kS, d, &freq), build_prompt_set(r, kS, {}, nullptr));
  }
}

TEST(PromptSet, InvariantsOnRandomRecords) {
  testing::Rng rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const auto names = testing::random_names(5, rng);
    SpeciesRecord r{"sp", names[0], {}, std::nullopt};
    for (std::size_t i = 1; i < 1 + rng() % 3; ++i) r.common_names.push_back(names[i]);
    DescriptionStore d;
    for (std::size_t i = 0; i < rng() % 3; ++i) d.add("sp", "a " + names[3 + i % 2] + " tail");
    const auto f = freq_of({{names[0], rng() % 10}, {names[1], rng() % 10}});
    for (const auto& strategy : all_strategies()) {
      const auto set = build_prompt_set(r, strategy, d, &f);
      ASSERT_GE(set.prompts.size(), 1u);
      const std::string& chosen = select_name(strategy, r, &f);
      for (const auto& p : set.prompts) ASSERT_NE(p.find(chosen), std::string::npos) << p;
      ASSERT_EQ(set, build_prompt_set(r, strategy, d, &f));
    }
  }
}

TEST(Strategy, NamesRoundTrip) {
  ASSERT_EQ(all_strategies().size(), 6u);
  EXPECT_EQ(to_string(all_strategies()[0]), "s-name");
  EXPECT_EQ(to_string(all_strategies()[3]), "c-name+descriptions");
  for (const auto& s : all_strategies()) EXPECT_EQ(parse_strategy(to_string(s)), s);
  EXPECT_FALSE(parse_strategy("x-name").has_value());
  EXPECT_EQ(parse_name_choice("f-name"), NameChoice::kFrequent);
}

TEST(Descriptions, LoadsFixtureAndPreservesOrder) {
  const auto d = load_descriptions_file(std::string(ZSR_TEST_DATA_DIR) + "/pica_descriptions.tsv");
  ASSERT_EQ(d.find("aves_001").size(), 1u);
  EXPECT_EQ(d.find("aves_001")[0], "a blue tail");
  EXPECT_TRUE(d.find("aves_002").empty());

  std::istringstream in("a\tfirst\nb\tother\na\tsecond\n");
  const auto two = load_descriptions(in);
  EXPECT_EQ(std::vector<std::string>(two.find("a").begin(), two.find("a").end()),
            (std::vector<std::string>{"first", "second"}));
  std::istringstream bad("a\tx\ty\n");
  EXPECT_THROW(load_descriptions(bad), ParseError);
}

TEST(PromptSetIo, JsonLinesRoundTrip) {
  const std::vector<PromptSet> sets = {
      {"aves_001", {"Here is a photo of the Pica pica.", "Pica pica has a \"blue\" tail."}},
      {"x\xC3\xA9", {"Here is a photo of the w\xC3\xA4ter lily."}}};
  std::stringstream ss;
  write_prompt_sets(sets, ss);
  EXPECT_EQ(ss.str().substr(0, ss.str().find('\n')),
            R"({"species_id":"aves_001","prompts":["Here is a photo of the Pica pica.",)"
            R"("Pica pica has a \"blue\" tail."]})");
  EXPECT_EQ(read_prompt_sets(ss), sets);
  std::istringstream bad("{\"species_id\": 3}\n");
  EXPECT_THROW(read_prompt_sets(bad), ParseError);
}

}  // namespace
}  // namespace zsr
