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
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "zsr/error.hpp"

namespace zsr {

/// Embedding file layout (all little-endian):
///   "ZSE1" | u16 version (=1) | u32 dim | u64 rows | rows*dim f32, row-major
/// plus a sidecar `<path>.ids` with one UTF-8 row identifier per line.
inline constexpr char kEmbeddingMagic[4] = {'Z', 'S', 'E', '1'};
inline constexpr uint16_t kEmbeddingVersion = 1;
inline constexpr std::size_t kEmbeddingHeaderSize = 4 + 2 + 4 + 8;
inline constexpr double kUnitNormTolerance = 1e-4;

enum class FormatErrc {
  kBadMagic,
  kVersionMismatch,
  kTruncated,
  kTrailingData,
  kIdCountMismatch,
  kMissingIds,
  kDuplicateId,
  kNonFinite,
  kNotNormalized,
  kBadDimension,
  kBadId,
};

std::string_view to_string(FormatErrc code);

class FormatError : public Error {
 public:
  FormatError(FormatErrc code, const std::string& message)
      : Error(ErrorKind::kFormat, std::string(to_string(code)) + ": " + message),
        code_(code),
        detail_(message) {}

  FormatErrc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  FormatErrc code_;
  std::string detail_;
};

/// Dense row-major float matrix with one string id per row.
class EmbeddingMatrix {
 public:
  EmbeddingMatrix() = default;

  /// Validates shape, id uniqueness and finiteness (FormatError otherwise).
  /// Unit norm is checked separately; see check_unit_norm / renormalize.
  EmbeddingMatrix(std::size_t dim, std::vector<std::string> ids, std::vector<float> data);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rows() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }

  std::span<const float> row(std::size_t i) const noexcept {
    return {data_.data() + i * dim_, dim_};
  }
  std::span<const float> data() const noexcept { return data_; }
  const std::vector<std::string>& ids() const noexcept { return ids_; }

  /// Row index for `id`, or npos.
  std::size_t find(std::string_view id) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// Throws FormatError(kNotNormalized) naming the first row whose L2 norm
  /// differs from 1 by more than `tolerance`.
  void check_unit_norm(double tolerance = kUnitNormTolerance) const;

  /// Scales every row to unit norm; zero rows raise FormatError(kNotNormalized).
  void renormalize();

  /// Bitwise equality of payload plus equal ids.
  friend bool operator==(const EmbeddingMatrix& a, const EmbeddingMatrix& b);

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> ids_;
  std::vector<float> data_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Unit-length copy of `v`; throws zsr::Error(kInvalidArgument) for zero or
/// non-finite vectors.
std::vector<float> l2_normalize(std::span<const float> v);

double l2_norm(std::span<const float> v) noexcept;

void write_embeddings(const EmbeddingMatrix& m, std::ostream& payload, std::ostream& ids);

/// Reads the binary payload and the id manifest. Does not check norms.
EmbeddingMatrix read_embeddings(std::istream& payload, std::istream& ids);

struct LoadOptions {
  /// Rescale rows instead of rejecting out-of-tolerance norms.
  bool renormalize = false;
};

std::string ids_path(const std::string& path);

void save_embeddings(const EmbeddingMatrix& m, const std::string& path);

/// Reads `path` and `path.ids`, then enforces unit-norm rows per `options`.
EmbeddingMatrix load_embeddings(const std::string& path, const LoadOptions& options = {});

}  // namespace zsr
