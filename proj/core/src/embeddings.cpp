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

#include "zsr/embeddings.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>

namespace zsr {

std::string_view to_string(FormatErrc code) {
  switch (code) {
    case FormatErrc::kBadMagic: return "bad-magic";
    case FormatErrc::kVersionMismatch: return "version-mismatch";
    case FormatErrc::kTruncated: return "truncated";
    case FormatErrc::kTrailingData: return "trailing-data";
    case FormatErrc::kIdCountMismatch: return "id-count-mismatch";
    case FormatErrc::kMissingIds: return "missing-ids";
    case FormatErrc::kDuplicateId: return "duplicate-id";
    case FormatErrc::kNonFinite: return "non-finite";
    case FormatErrc::kNotNormalized: return "not-normalized";
    case FormatErrc::kBadDimension: return "bad-dimension";
    case FormatErrc::kBadId: return "bad-id";
  }
  return "unknown";
}

EmbeddingMatrix::EmbeddingMatrix(std::size_t dim, std::vector<std::string> ids,
                                 std::vector<float> data)
    : dim_(dim), ids_(std::move(ids)), data_(std::move(data)) {
  if (dim_ == 0 || dim_ > std::numeric_limits<uint32_t>::max()) {
    throw FormatError(FormatErrc::kBadDimension, "dimension must be in [1, 2^32)");
  }
  if (data_.size() != ids_.size() * dim_) {
    throw FormatError(FormatErrc::kIdCountMismatch,
                      std::to_string(ids_.size()) + " ids for " +
                          std::to_string(data_.size() / dim_) + " rows");
  }
  index_.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i].empty() || ids_[i].find_first_of("\n\r") != std::string::npos) {
      throw FormatError(FormatErrc::kBadId, "row " + std::to_string(i) + " has an invalid id");
    }
    if (!index_.emplace(ids_[i], i).second) {
      throw FormatError(FormatErrc::kDuplicateId, "duplicate id '" + ids_[i] + "'");
    }
  }
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!std::isfinite(data_[i])) {
      throw FormatError(FormatErrc::kNonFinite,
                        "row '" + ids_[i / dim_] + "' has a NaN or infinite component");
    }
  }
}

std::size_t EmbeddingMatrix::find(std::string_view id) const {
  const auto it = index_.find(std::string(id));
  return it == index_.end() ? npos : it->second;
}

double l2_norm(std::span<const float> v) noexcept {
  double sum = 0.0;
  for (float x : v) sum += static_cast<double>(x) * x;
  return std::sqrt(sum);
}

void EmbeddingMatrix::check_unit_norm(double tolerance) const {
  for (std::size_t i = 0; i < rows(); ++i) {
    const double norm = l2_norm(row(i));
    if (std::abs(norm - 1.0) > tolerance) {
      throw FormatError(FormatErrc::kNotNormalized,
                        "row '" + ids_[i] + "' has L2 norm " + std::to_string(norm) +
                            " (use --renormalize to rescale)");
    }
  }
}

void EmbeddingMatrix::renormalize() {
  for (std::size_t i = 0; i < rows(); ++i) {
    std::span<float> r(data_.data() + i * dim_, dim_);
    const double norm = l2_norm(r);
    if (norm == 0.0) throw FormatError(FormatErrc::kNotNormalized, "row '" + ids_[i] + "' is zero");
    for (float& x : r) x = static_cast<float>(x / norm);
  }
}

bool operator==(const EmbeddingMatrix& a, const EmbeddingMatrix& b) {
  return a.dim_ == b.dim_ && a.ids_ == b.ids_ && a.data_.size() == b.data_.size() &&
         std::memcmp(a.data_.data(), b.data_.data(), a.data_.size() * sizeof(float)) == 0;
}

std::vector<float> l2_normalize(std::span<const float> v) {
  const double norm = l2_norm(v);
  if (norm == 0.0 || !std::isfinite(norm)) {
    throw Error(ErrorKind::kInvalidArgument, "cannot normalize a zero or non-finite vector");
  }
  std::vector<float> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<float>(v[i] / norm);
  return out;
}

namespace {

static_assert(sizeof(float) == 4 && std::numeric_limits<float>::is_iec559);

template <typename T>
void put_le(std::ostream& out, T value) {
  char bytes[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    bytes[i] = static_cast<char>((static_cast<uint64_t>(value) >> (8 * i)) & 0xFF);
  }
  out.write(bytes, sizeof(T));
}

template <typename T>
T get_le(const unsigned char* bytes) {
  uint64_t v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<uint64_t>(bytes[i]) << (8 * i);
  return static_cast<T>(v);
}

void write_floats(std::ostream& out, std::span<const float> values) {
  if constexpr (std::endian::native == std::endian::little) {
    out.write(reinterpret_cast<const char*>(values.data()),
              static_cast<std::streamsize>(values.size_bytes()));
  } else {
    for (float f : values) put_le(out, std::bit_cast<uint32_t>(f));
  }
}

// Remaining bytes in a seekable stream, or -1.
std::streamoff remaining_bytes(std::istream& in) {
  const auto here = in.tellg();
  if (here < 0) return -1;
  in.seekg(0, std::ios::end);
  const auto end = in.tellg();
  in.seekg(here);
  if (end < 0 || !in) {
    in.clear();
    return -1;
  }
  return end - here;
}

}  // namespace

void write_embeddings(const EmbeddingMatrix& m, std::ostream& payload, std::ostream& ids) {
  payload.write(kEmbeddingMagic, 4);
  put_le<uint16_t>(payload, kEmbeddingVersion);
  put_le<uint32_t>(payload, static_cast<uint32_t>(m.dim()));
  put_le<uint64_t>(payload, static_cast<uint64_t>(m.rows()));
  write_floats(payload, m.data());
  for (const auto& id : m.ids()) ids << id << '\n';
  if (!payload || !ids) throw Error(ErrorKind::kIo, "failed writing embeddings");
}

EmbeddingMatrix read_embeddings(std::istream& payload, std::istream& ids_in) {
  unsigned char header[kEmbeddingHeaderSize];
  payload.read(reinterpret_cast<char*>(header), 4);
  if (payload.gcount() < 4) throw FormatError(FormatErrc::kTruncated, "file shorter than magic");
  if (std::memcmp(header, kEmbeddingMagic, 4) != 0) {
    throw FormatError(FormatErrc::kBadMagic, "expected 'ZSE1'");
  }
  payload.read(reinterpret_cast<char*>(header + 4), kEmbeddingHeaderSize - 4);
  if (payload.gcount() < static_cast<std::streamsize>(kEmbeddingHeaderSize - 4)) {
    throw FormatError(FormatErrc::kTruncated, "incomplete header");
  }
  const auto version = get_le<uint16_t>(header + 4);
  if (version != kEmbeddingVersion) {
    throw FormatError(FormatErrc::kVersionMismatch,
                      "unsupported version " + std::to_string(version));
  }
  const auto dim = get_le<uint32_t>(header + 6);
  const auto rows = get_le<uint64_t>(header + 10);
  if (dim == 0) throw FormatError(FormatErrc::kBadDimension, "dimension is zero");
  if (rows > std::numeric_limits<uint64_t>::max() / 4 / dim) {
    throw FormatError(FormatErrc::kTruncated, "declared size overflows");
  }
  const uint64_t expected = rows * dim * 4;
  if (const auto remaining = remaining_bytes(payload); remaining >= 0) {
    if (static_cast<uint64_t>(remaining) < expected) {
      throw FormatError(FormatErrc::kTruncated, "payload has " + std::to_string(remaining) +
                                                    " bytes, header declares " +
                                                    std::to_string(expected));
    }
    if (static_cast<uint64_t>(remaining) > expected) {
      throw FormatError(FormatErrc::kTrailingData, "payload longer than declared row count");
    }
  }

  std::vector<float> data;
  // Grow in bounded chunks so a corrupt row count cannot force a huge allocation.
  constexpr uint64_t kChunkFloats = 1u << 20;
  uint64_t total = rows * dim;
  while (data.size() < total) {
    const std::size_t old = data.size();
    const std::size_t take = static_cast<std::size_t>(std::min(kChunkFloats, total - old));
    data.resize(old + take);
    payload.read(reinterpret_cast<char*>(data.data() + old),
                 static_cast<std::streamsize>(take * 4));
    if (payload.gcount() != static_cast<std::streamsize>(take * 4)) {
      throw FormatError(FormatErrc::kTruncated, "payload ended early");
    }
  }
  if constexpr (std::endian::native != std::endian::little) {
    for (float& f : data) {
      f = std::bit_cast<float>(get_le<uint32_t>(reinterpret_cast<const unsigned char*>(&f)));
    }
  }
  if (payload.peek() != std::char_traits<char>::eof()) {
    throw FormatError(FormatErrc::kTrailingData, "payload longer than declared row count");
  }

  std::vector<std::string> ids;
  ids.reserve(static_cast<std::size_t>(rows));
  std::string line;
  while (std::getline(ids_in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ids.push_back(line);
    if (ids.size() > rows) break;
  }
  if (ids.size() != rows) {
    throw FormatError(FormatErrc::kIdCountMismatch,
                      "manifest has " + std::string(ids.size() > rows ? "more than " : "") +
                          std::to_string(ids.size()) + " ids, header declares " +
                          std::to_string(rows) + " rows");
  }
  return EmbeddingMatrix(dim, std::move(ids), std::move(data));
}

std::string ids_path(const std::string& path) { return path + ".ids"; }

void save_embeddings(const EmbeddingMatrix& m, const std::string& path) {
  std::ofstream payload(path, std::ios::binary | std::ios::trunc);
  if (!payload) throw Error(ErrorKind::kIo, "cannot write '" + path + "'");
  std::ofstream ids(ids_path(path), std::ios::trunc);
  if (!ids) throw Error(ErrorKind::kIo, "cannot write '" + ids_path(path) + "'");
  write_embeddings(m, payload, ids);
}

EmbeddingMatrix load_embeddings(const std::string& path, const LoadOptions& options) {
  std::ifstream payload(path, std::ios::binary);
  if (!payload) throw Error(ErrorKind::kIo, "cannot open embeddings '" + path + "'");
  std::ifstream ids(ids_path(path));
  if (!ids) {
    throw FormatError(FormatErrc::kMissingIds, "missing id manifest '" + ids_path(path) + "'");
  }
  EmbeddingMatrix m = [&] {
    try {
      return read_embeddings(payload, ids);
    } catch (const FormatError& e) {
      throw FormatError(e.code(), path + ": " + e.detail());
    }
  }();
  if (options.renormalize) {
    m.renormalize();
  } else {
    m.check_unit_norm();
  }
  return m;
}

}  // namespace zsr
