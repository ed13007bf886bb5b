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

#include <cstring>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <unistd.h>

#include "synthetic.hpp"
#include "zsr/embeddings.hpp"

namespace zsr {
namespace {

namespace fs = std::filesystem;
using testing::Rng;

EmbeddingMatrix random_matrix(std::size_t rows, std::size_t dim, Rng& rng) {
  std::vector<std::string> ids;
  std::vector<float> data;
  for (std::size_t i = 0; i < rows; ++i) {
    ids.push_back("row" + std::to_string(i));
    const auto v = testing::random_unit(dim, rng);
    data.insert(data.end(), v.begin(), v.end());
  }
  return EmbeddingMatrix(dim, std::move(ids), std::move(data));
}

struct Serialized {
  std::string payload;
  std::string ids;
};

Serialized serialize(const EmbeddingMatrix& m) {
  std::ostringstream p(std::ios::binary), i;
  write_embeddings(m, p, i);
  return {p.str(), i.str()};
}

EmbeddingMatrix deserialize(const Serialized& s) {
  std::istringstream p(s.payload, std::ios::binary), i(s.ids);
  return read_embeddings(p, i);
}

FormatErrc error_code(const Serialized& s) {
  try {
    deserialize(s);
  } catch (const FormatError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no FormatError";
  return FormatErrc::kBadMagic;
}

TEST(L2Normalize, Basics) {
  const std::vector<float> v = {3.0f, 4.0f};
  const auto n = l2_normalize(v);
  EXPECT_FLOAT_EQ(n[0], 0.6f);
  EXPECT_FLOAT_EQ(n[1], 0.8f);
  EXPECT_THROW(l2_normalize(std::vector<float>{0.0f, 0.0f}), Error);
  EXPECT_THROW(l2_normalize(std::vector<float>{std::numeric_limits<float>::infinity(), 0.0f}),
               Error);
}

TEST(EmbeddingMatrix, ValidatesConstruction) {
  EXPECT_THROW(EmbeddingMatrix(2, {"a"}, {1.0f}), FormatError);
  EXPECT_THROW(EmbeddingMatrix(1, {"a", "a"}, {1.0f, 1.0f}), FormatError);
  EXPECT_THROW(EmbeddingMatrix(1, {""}, {1.0f}), FormatError);
  EXPECT_THROW(EmbeddingMatrix(1, {"a"}, {std::numeric_limits<float>::quiet_NaN()}), FormatError);
  const EmbeddingMatrix m(2, {"a", "b"}, {1.0f, 0.0f, 0.0f, 1.0f});
  EXPECT_EQ(m.find("b"), 1u);
  EXPECT_EQ(m.find("c"), EmbeddingMatrix::npos);
}

TEST(EmbeddingIo, HeaderLayoutIsLittleEndian) {
  const EmbeddingMatrix m(3, {"a"}, {1.0f, 0.0f, 0.0f});
  const auto s = serialize(m);
  ASSERT_EQ(s.payload.size(), kEmbeddingHeaderSize + 3 * sizeof(float));
  const unsigned char expected[] = {'Z', 'S', 'E', '1', 1, 0, 3, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0};
  EXPECT_EQ(std::memcmp(s.payload.data(), expected, sizeof(expected)), 0);
  EXPECT_EQ(s.ids, "a\n");
}

TEST(EmbeddingIo, RoundTripsSmallMatrix) {
  Rng rng(41);
  const auto m = random_matrix(3, 4, rng);
  const auto back = deserialize(serialize(m));
  EXPECT_EQ(back, m);
  EXPECT_EQ(back.rows(), 3u);
  EXPECT_EQ(back.dim(), 4u);
}

TEST(EmbeddingIo, RoundTripsEmptyMatrix) {
  const EmbeddingMatrix empty(512, {}, {});
  const auto back = deserialize(serialize(empty));
  EXPECT_EQ(back.rows(), 0u);
  EXPECT_EQ(back.dim(), 512u);
}

TEST(EmbeddingIo, RoundTripsRandomMatrices) {
  Rng rng(43);
  std::uniform_int_distribution<std::size_t> rows(0, 40), dim(1, 64);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_matrix(rows(rng), dim(rng), rng);
    ASSERT_EQ(deserialize(serialize(m)), m);
  }
}

TEST(EmbeddingIo, RejectsCorruptPayloads) {
  Rng rng(47);
  const auto good = serialize(random_matrix(3, 4, rng));

  auto bad_magic = good;
  bad_magic.payload[0] = 'X';
  EXPECT_EQ(error_code(bad_magic), FormatErrc::kBadMagic);

  auto version = good;
  version.payload[4] = 2;
  EXPECT_EQ(error_code(version), FormatErrc::kVersionMismatch);

  auto truncated = good;
  truncated.payload.resize(truncated.payload.size() - 3);
  EXPECT_EQ(error_code(truncated), FormatErrc::kTruncated);

  auto short_header = good;
  short_header.payload.resize(7);
  EXPECT_EQ(error_code(short_header), FormatErrc::kTruncated);

  auto trailing = good;
  trailing.payload += "x";
  EXPECT_EQ(error_code(trailing), FormatErrc::kTrailingData);

  auto ids = good;
  ids.ids += "extra\n";
  EXPECT_EQ(error_code(ids), FormatErrc::kIdCountMismatch);

  auto dup = good;
  dup.ids = "a\na\nb\n";
  EXPECT_EQ(error_code(dup), FormatErrc::kDuplicateId);

  auto huge_rows = good;
  huge_rows.payload[10 + 7] = 0x7F;  // row count near 2^63
  EXPECT_EQ(error_code(huge_rows), FormatErrc::kTruncated);

  auto nan = good;
  const float q = std::numeric_limits<float>::quiet_NaN();
  std::memcpy(nan.payload.data() + kEmbeddingHeaderSize, &q, sizeof(q));
  EXPECT_EQ(error_code(nan), FormatErrc::kNonFinite);
}

class EmbeddingFileTest : public ::testing::Test {
 protected:
  void SetUp() override {
    path_ = (fs::temp_directory_path() / ("zsr_emb_" + std::to_string(::getpid()) + ".bin"))
                .string();
  }
  void TearDown() override {
    fs::remove(path_);
    fs::remove(ids_path(path_));
  }
  std::string path_;
};

TEST_F(EmbeddingFileTest, SavesAndLoads) {
  Rng rng(53);
  const auto m = random_matrix(10, 16, rng);
  save_embeddings(m, path_);
  EXPECT_TRUE(fs::exists(ids_path(path_)));
  EXPECT_EQ(load_embeddings(path_), m);
}

TEST_F(EmbeddingFileTest, MissingIdsFile) {
  Rng rng(59);
  save_embeddings(random_matrix(2, 4, rng), path_);
  fs::remove(ids_path(path_));
  try {
    load_embeddings(path_);
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.code(), FormatErrc::kMissingIds);
  }
}

TEST_F(EmbeddingFileTest, NormCheckAndRenormalize) {
  const EmbeddingMatrix m(2, {"a", "b"}, {3.0f, 4.0f, 0.0f, 1.0f});
  save_embeddings(m, path_);
  try {
    load_embeddings(path_);
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.code(), FormatErrc::kNotNormalized);
  }
  const auto fixed = load_embeddings(path_, {.renormalize = true});
  EXPECT_FLOAT_EQ(fixed.row(0)[0], 0.6f);
  EXPECT_FLOAT_EQ(fixed.row(0)[1], 0.8f);
  EXPECT_FLOAT_EQ(fixed.row(1)[1], 1.0f);

  const EmbeddingMatrix nearly(2, {"a"}, {1.00005f, 0.0f});
  EXPECT_NO_THROW(nearly.check_unit_norm());
  const EmbeddingMatrix off(2, {"a"}, {1.001f, 0.0f});
  EXPECT_THROW(off.check_unit_norm(), FormatError);
}

TEST(EmbeddingFile, MissingPayloadIsIoError) {
  try {
    load_embeddings("/nonexistent/emb.bin");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIo);
  }
}

}  // namespace
}  // namespace zsr
