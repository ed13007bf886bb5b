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
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zsr/metrics.hpp"

namespace zsr {

/// An EvalReport plus the run labels needed to tabulate it.
struct ReportDocument {
  std::string dataset;
  std::string strategy;
  std::size_t images = 0;
  EvalReport report;
};

/// Deterministic pretty-printed JSON (keys in fixed order, trailing newline).
/// Keys: dataset, strategy, K, images, macro_accuracy, per_class,
/// per_class_counts, per_type, type_sizes.
std::string to_json(const ReportDocument& doc);

ReportDocument parse_report(std::string_view json);
ReportDocument read_report_file(const std::string& path);

struct LabeledImage {
  std::string image_id;
  std::string species_id;
};

/// Two-column TSV `image_id \t species_id`. Duplicate image ids are rejected.
std::vector<LabeledImage> read_labels(std::istream& in);
std::vector<LabeledImage> read_labels_file(const std::string& path);

struct ImagePrediction {
  std::string image_id;
  std::string true_id;
  std::string predicted_id;
};

/// TSV `image_id \t true_id \t pred_id`, one line per image.
void write_predictions(std::span<const ImagePrediction> rows, std::ostream& out);

}  // namespace zsr
