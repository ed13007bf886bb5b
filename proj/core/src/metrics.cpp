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

#include "zsr/metrics.hpp"

#include <algorithm>

#include "zsr/error.hpp"

namespace zsr {

double stable_mean(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

EvalReport evaluate(std::span<const Prediction> predictions,
                    std::span<const std::string> classes) {
  EvalReport report;
  std::unordered_map<std::string, std::size_t> slot;
  for (const auto& c : classes) {
    if (!slot.emplace(c, report.per_class.size()).second) {
      throw Error(ErrorKind::kDuplicateKey, "class '" + c + "' listed twice");
    }
    report.per_class.push_back({c, 0, 0, 0.0});
  }
  for (const auto& p : predictions) {
    const auto it = slot.find(p.true_id);
    if (it == slot.end()) {
      throw Error(ErrorKind::kIdMismatch, "label '" + p.true_id + "' is not a known class");
    }
    auto& tally = report.per_class[it->second];
    ++tally.total;
    if (p.predicted_id == p.true_id) ++tally.correct;
  }
  std::vector<double> accuracies;
  accuracies.reserve(report.per_class.size());
  for (auto& tally : report.per_class) {
    if (tally.total == 0) {
      throw Error(ErrorKind::kMetric,
                  "class '" + tally.species_id + "' has no labeled examples");
    }
    tally.accuracy = static_cast<double>(tally.correct) / static_cast<double>(tally.total);
    accuracies.push_back(tally.accuracy);
  }
  report.macro_accuracy = stable_mean(std::move(accuracies));
  return report;
}

std::vector<TypeAccuracy> breakdown_by_type(
    const EvalReport& report, const std::unordered_map<std::string, std::string>& type_of) {
  std::vector<std::string> order;
  std::unordered_map<std::string, std::vector<double>> members;
  for (const auto& c : report.per_class) {
    const auto it = type_of.find(c.species_id);
    if (it == type_of.end() || it->second.empty()) {
      throw Error(ErrorKind::kMetric, "class '" + c.species_id + "' has no organism type");
    }
    auto [m, inserted] = members.try_emplace(it->second);
    if (inserted) order.push_back(it->second);
    m->second.push_back(c.accuracy);
  }
  std::vector<TypeAccuracy> out;
  for (const auto& type : order) {
    auto& values = members[type];
    const std::size_t n = values.size();
    out.push_back({type, n, stable_mean(std::move(values))});
  }
  return out;
}

std::vector<TypeAccuracy> breakdown_by_type(const EvalReport& report, const NameTable& names) {
  std::unordered_map<std::string, std::string> type_of;
  for (const auto& r : names.records()) {
    if (r.organism_type) type_of.emplace(r.species_id, *r.organism_type);
  }
  return breakdown_by_type(report, type_of);
}

}  // namespace zsr
