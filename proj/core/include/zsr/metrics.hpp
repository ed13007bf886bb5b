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
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "zsr/taxonomy.hpp"

namespace zsr {

struct Prediction {
  std::string true_id;
  std::string predicted_id;
};

struct ClassAccuracy {
  std::string species_id;
  std::size_t correct = 0;
  std::size_t total = 0;
  double accuracy = 0.0;  // correct / total
};

struct TypeAccuracy {
  std::string organism_type;
  std::size_t classes = 0;
  double accuracy = 0.0;  // mean of the member classes' accuracies
};

/// Per-class top-1 accuracies and their unweighted mean over the K classes.
struct EvalReport {
  std::vector<ClassAccuracy> per_class;  // in class order
  double macro_accuracy = 0.0;
  std::vector<TypeAccuracy> per_type;    // empty unless a breakdown was attached

  std::size_t K() const noexcept { return per_class.size(); }
};

/// Throws kIdMismatch for true labels outside `classes` and kMetric for a
/// class without examples. Predicted ids outside `classes` count as wrong.
EvalReport evaluate(std::span<const Prediction> predictions,
                    std::span<const std::string> classes);

/// Mean of per-class accuracies within each organism type, types in order of
/// first appearance. Throws kMetric naming any class without a type.
std::vector<TypeAccuracy> breakdown_by_type(
    const EvalReport& report, const std::unordered_map<std::string, std::string>& type_of);

std::vector<TypeAccuracy> breakdown_by_type(const EvalReport& report, const NameTable& names);

/// Order-independent mean: sums the values in sorted order.
double stable_mean(std::vector<double> values);

}  // namespace zsr
