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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zsr/embeddings.hpp"

namespace zsr {

/// Prompt embeddings of one class.
struct ClassPrompts {
  std::string species_id;
  std::vector<std::vector<float>> embeddings;
};

/// Zero-shot class model: each class is scored by the mean cosine similarity
/// between the image and the class's prompt embeddings. Since the mean of
/// dot products equals the dot product with the mean, each class is stored
/// as its (unnormalized) prompt centroid.
class ClassModel {
 public:
  /// Throws kInvalidArgument for classes without prompts and kDimension when
  /// prompt dimensions disagree.
  explicit ClassModel(std::vector<ClassPrompts> classes);

  /// Groups text-embedding rows into classes. Row ids of the form
  /// `<species_id>#<k>` belong to `<species_id>`; other ids name the class
  /// directly. With a non-empty `class_order`, classes follow that order and
  /// every listed class must have at least one row (kIdMismatch otherwise);
  /// otherwise classes appear in first-row order.
  static ClassModel from_text_embeddings(const EmbeddingMatrix& text,
                                         std::span<const std::string> class_order = {});

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return classes_.size(); }
  const std::vector<std::string>& classes() const noexcept { return classes_; }
  std::size_t prompt_count(std::size_t k) const noexcept { return prompt_counts_[k]; }

  /// Mean cosine similarity to every class. Throws kDimension on mismatch.
  std::vector<double> score(std::span<const float> image) const;

  /// Index of the best-scoring class; ties go to the lowest index.
  std::size_t classify(std::span<const float> image) const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> classes_;
  std::vector<std::size_t> prompt_counts_;
  std::vector<double> centroids_;  // classes x dim, row-major
};

/// Class id from a text-embedding row id (`pica#2` -> `pica`).
std::string_view class_of_prompt_id(std::string_view row_id) noexcept;

/// Index of the maximum; ties go to the lowest index. Empty input -> npos.
std::size_t argmax(std::span<const double> scores) noexcept;

/// Classifies every row of `images`, splitting rows across `threads` workers.
std::vector<std::size_t> classify_all(const ClassModel& model, const EmbeddingMatrix& images,
                                      std::size_t threads = 1);

}  // namespace zsr
