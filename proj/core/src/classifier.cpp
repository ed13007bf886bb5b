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

#include "zsr/classifier.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

#include "zsr/error.hpp"

namespace zsr {

ClassModel::ClassModel(std::vector<ClassPrompts> classes) {
  for (const auto& c : classes) {
    if (c.embeddings.empty()) {
      throw Error(ErrorKind::kInvalidArgument, "class '" + c.species_id + "' has no prompts");
    }
  }
  dim_ = classes.empty() ? 0 : classes.front().embeddings.front().size();
  centroids_.assign(classes.size() * dim_, 0.0);
  for (std::size_t k = 0; k < classes.size(); ++k) {
    double* centroid = centroids_.data() + k * dim_;
    for (const auto& e : classes[k].embeddings) {
      if (e.size() != dim_) {
        throw Error(ErrorKind::kDimension, "class '" + classes[k].species_id +
                                              "' has a prompt of dimension " +
                                              std::to_string(e.size()) + ", expected " +
                                              std::to_string(dim_));
      }
      for (std::size_t d = 0; d < dim_; ++d) centroid[d] += e[d];
    }
    const double n = static_cast<double>(classes[k].embeddings.size());
    for (std::size_t d = 0; d < dim_; ++d) centroid[d] /= n;
    classes_.push_back(std::move(classes[k].species_id));
    prompt_counts_.push_back(classes[k].embeddings.size());
  }
}

std::string_view class_of_prompt_id(std::string_view row_id) noexcept {
  const auto hash = row_id.rfind('#');
  if (hash == std::string_view::npos || hash == 0 || hash + 1 == row_id.size()) return row_id;
  const auto suffix = row_id.substr(hash + 1);
  const bool numeric = std::all_of(suffix.begin(), suffix.end(),
                                   [](char c) { return c >= '0' && c <= '9'; });
  return numeric ? row_id.substr(0, hash) : row_id;
}

ClassModel ClassModel::from_text_embeddings(const EmbeddingMatrix& text,
                                            std::span<const std::string> class_order) {
  std::vector<ClassPrompts> classes;
  std::unordered_map<std::string, std::size_t> slot;
  for (const auto& id : class_order) {
    if (slot.emplace(id, classes.size()).second) classes.push_back({id, {}});
  }
  const bool fixed = !class_order.empty();
  for (std::size_t i = 0; i < text.rows(); ++i) {
    const std::string cls(class_of_prompt_id(text.ids()[i]));
    auto it = slot.find(cls);
    if (it == slot.end()) {
      if (fixed) {
        throw Error(ErrorKind::kIdMismatch,
                    "text embedding '" + text.ids()[i] + "' belongs to unknown class '" + cls + "'");
      }
      it = slot.emplace(cls, classes.size()).first;
      classes.push_back({cls, {}});
    }
    const auto row = text.row(i);
    classes[it->second].embeddings.emplace_back(row.begin(), row.end());
  }
  for (const auto& c : classes) {
    if (c.embeddings.empty()) {
      throw Error(ErrorKind::kIdMismatch, "class '" + c.species_id + "' has no text embeddings");
    }
  }
  return ClassModel(std::move(classes));
}

std::vector<double> ClassModel::score(std::span<const float> image) const {
  if (image.size() != dim_) {
    throw Error(ErrorKind::kDimension, "image dimension " + std::to_string(image.size()) +
                                           " does not match model dimension " +
                                           std::to_string(dim_));
  }
  std::vector<double> scores(classes_.size(), 0.0);
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    const double* centroid = centroids_.data() + k * dim_;
    double dot = 0.0;
    for (std::size_t d = 0; d < dim_; ++d) dot += centroid[d] * image[d];
    scores[k] = dot;
  }
  return scores;
}

std::size_t argmax(std::span<const double> scores) noexcept {
  if (scores.empty()) return static_cast<std::size_t>(-1);
  std::size_t best = 0;
  for (std::size_t k = 1; k < scores.size(); ++k) {
    if (scores[k] > scores[best]) best = k;
  }
  return best;
}

std::size_t ClassModel::classify(std::span<const float> image) const {
  if (classes_.empty()) throw Error(ErrorKind::kInvalidArgument, "class model is empty");
  return argmax(score(image));
}

std::vector<std::size_t> classify_all(const ClassModel& model, const EmbeddingMatrix& images,
                                      std::size_t threads) {
  if (!images.empty() && images.dim() != model.dim()) {
    throw Error(ErrorKind::kDimension, "image embeddings have dimension " +
                                           std::to_string(images.dim()) + ", text embeddings " +
                                           std::to_string(model.dim()));
  }
  std::vector<std::size_t> out(images.rows());
  const std::size_t n = images.rows();
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, n));
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) out[i] = model.classify(images.row(i));
  };
  if (threads == 1) {
    work(0, n);
    return out;
  }
  {
    std::vector<std::jthread> workers;
    for (std::size_t t = 0; t < threads; ++t) {
      workers.emplace_back(work, n * t / threads, n * (t + 1) / threads);
    }
  }
  return out;
}

}  // namespace zsr
