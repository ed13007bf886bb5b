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

#include <random>
#include <sstream>

#include "zsr/error.hpp"
#include "zsr/taxonomy.hpp"
#include "zsr/text.hpp"

#ifndef ZSR_TEST_DATA_DIR
#error "ZSR_TEST_DATA_DIR must be defined"
#endif

namespace zsr {
namespace {

NameTable parse(const std::string& text) {
  std::istringstream in(text);
  return load_name_table(in);
}

SpeciesRecord record(std::string sci, std::vector<std::string> common) {
  return {"id", std::move(sci), std::move(common), std::nullopt};
}

TEST(LoadNameTable, ParsesPipeSeparatedCommonNames) {
  const auto t = parse("aves_001\tPica pica\tcommon magpie|eurasian magpie\tbirds\n");
  ASSERT_EQ(t.size(), 1u);
  const auto& r = t.records()[0];
  EXPECT_EQ(r.species_id, "aves_001");
  EXPECT_EQ(r.scientific_name, "Pica pica");
  EXPECT_EQ(r.common_names, (std::vector<std::string>{"common magpie", "eurasian magpie"}));
  EXPECT_EQ(r.organism_type, "birds");
}

TEST(LoadNameTable, ReadsFixtureFile) {
  const auto t = load_name_table_file(std::string(ZSR_TEST_DATA_DIR) + "/four_species.tsv");
  ASSERT_EQ(t.size(), 4u);
  EXPECT_EQ(t.records()[0].common_names.size(), 2u);
  EXPECT_EQ(t.records()[3].common_names, std::vector<std::string>{"Say's Phoebe"});
  EXPECT_EQ(t.records()[2].organism_type, "plants");
}

TEST(LoadNameTable, EmptyInputGivesEmptyTable) {
  EXPECT_TRUE(parse("").empty());
  EXPECT_TRUE(parse("# only a comment\n\n").empty());
}

TEST(LoadNameTable, EmptyCommonAndTypeColumns) {
  const auto t = parse("x\tPonana Citrina\t\t\n");
  EXPECT_TRUE(t.records()[0].common_names.empty());
  EXPECT_FALSE(t.records()[0].organism_type.has_value());
}

TEST(LoadNameTable, AcceptsCrlf) {
  const auto t = parse("x\tPica pica\tmagpie\tbirds\r\n");
  EXPECT_EQ(t.records()[0].organism_type, "birds");
}

TEST(LoadNameTable, RejectsMalformedRowsWithLineNumbers) {
  try {
    parse("# header\nok\tPica pica\t\t\nbad\tonly three\tcolumns\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
  }
  EXPECT_THROW(parse("x\t\tmagpie\tbirds\n"), ParseError);       // missing scientific name
  EXPECT_THROW(parse("x\t   \tmagpie\tbirds\n"), ParseError);    // blank scientific name
  EXPECT_THROW(parse("x\tPica\ta||b\tbirds\n"), ParseError);     // empty common entry
  EXPECT_THROW(parse("x\tPica\tMagpie|magpie\tbirds\n"), ParseError);  // duplicate after normalization
  EXPECT_THROW(parse("x\tPica\tm\tb\textra\n"), ParseError);
}

TEST(LoadNameTable, RejectsDuplicateSpeciesIds) {
  try {
    parse("a\tPica pica\t\t\na\tLepus timidus\t\t\n");
    FAIL() << "expected duplicate-key error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDuplicateKey);
  }
}

TEST(LoadNameTable, MissingFileIsIoError) {
  try {
    load_name_table_file("/nonexistent/names.tsv");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIo);
  }
}

TEST(ResolveCommon, PrefersFirstCommonName) {
  EXPECT_EQ(resolve_common(record("Lepus Timidus", {"mountain hare"})), "mountain hare");
  EXPECT_EQ(resolve_common(record("Pica pica", {"common magpie"})), "common magpie");
  EXPECT_EQ(resolve_common(record("Pica pica", {"common magpie", "eurasian magpie"})),
            "common magpie");
}

TEST(ResolveCommon, FallsBackToScientificName) {
  EXPECT_EQ(resolve_common(record("Ponana Citrina", {})), "Ponana Citrina");
}

TEST(NameTable, LookupByNormalizedNames) {
  const auto t = parse("a\tPica pica\tcommon magpie\tbirds\nb\tLepus timidus\tmountain hare\t\n");
  ASSERT_EQ(t.lookup("PICA  pica").size(), 1u);
  EXPECT_EQ(t.lookup("PICA  pica")[0]->species_id, "a");
  EXPECT_EQ(t.lookup("Mountain Hare")[0]->species_id, "b");
  EXPECT_TRUE(t.lookup("black stork").empty());
  ASSERT_NE(t.find_id("b"), nullptr);
  EXPECT_EQ(t.find_id("zzz"), nullptr);
}

TEST(NameTable, EveryRecordReachableByScientificName) {
  const auto t = load_name_table_file(std::string(ZSR_TEST_DATA_DIR) + "/four_species.tsv");
  for (const auto& r : t.records()) {
    const auto hits = t.lookup(r.scientific_name);
    ASSERT_FALSE(hits.empty());
    EXPECT_EQ(hits.front()->species_id, r.species_id);
  }
}

TEST(NameTable, RoundTripsThroughSerialization) {
  std::mt19937 rng(3);
  const std::vector<std::string> words = {"pica", "Lepus", "hare", "Say's", "stork",
                                          "Nymphaea", "w\xC3\xA4ter", "lily", "black"};
  std::uniform_int_distribution<std::size_t> w(0, words.size() - 1);
  std::uniform_int_distribution<int> n_common(0, 3);
  std::uniform_int_distribution<int> n_words(1, 3);
  auto phrase = [&] {
    std::string s;
    for (int i = n_words(rng); i > 0; --i) s += (s.empty() ? "" : " ") + words[w(rng)];
    return s;
  };
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<SpeciesRecord> records;
    std::uniform_int_distribution<int> rows(0, 12);
    for (int i = rows(rng); i > 0; --i) {
      SpeciesRecord r;
      r.species_id = "sp" + std::to_string(i);
      r.scientific_name = phrase();
      std::vector<std::string> seen;
      for (int c = n_common(rng); c > 0; --c) {
        auto p = phrase();
        bool dup = false;
        for (const auto& s : seen) dup = dup || normalize_name(s) == normalize_name(p);
        if (!dup) {
          seen.push_back(p);
          r.common_names.push_back(p);
        }
      }
      if (rng() % 2) r.organism_type = words[w(rng)];
      records.push_back(std::move(r));
    }
    const NameTable original(records);
    std::ostringstream out;
    write_name_table(original, out);
    const NameTable reloaded = parse(out.str());
    ASSERT_EQ(reloaded.size(), original.size());
    for (std::size_t i = 0; i < original.size(); ++i) {
      ASSERT_EQ(reloaded.records()[i], original.records()[i]);
    }
  }
}

}  // namespace
}  // namespace zsr
