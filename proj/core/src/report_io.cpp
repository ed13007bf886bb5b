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

#include "zsr/report_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>
#include "zsr/error.hpp"
#include "zsr/text.hpp"

namespace zsr {

using ordered_json = nlohmann::ordered_json;

std::string to_json(const ReportDocument& doc) {
  const EvalReport& r = doc.report;
  ordered_json j;
  j["dataset"] = doc.dataset;
  j["strategy"] = doc.strategy;
  j["K"] = r.K();
  j["images"] = doc.images;
  j["macro_accuracy"] = r.macro_accuracy;
  ordered_json per_class = ordered_json::object();
  ordered_json counts = ordered_json::object();
  for (const auto& c : r.per_class) {
    per_class[c.species_id] = c.accuracy;
    counts[c.species_id] = {c.correct, c.total};
  }
  j["per_class"] = std::move(per_class);
  j["per_class_counts"] = std::move(counts);
  ordered_json per_type = ordered_json::object();
  ordered_json sizes = ordered_json::object();
  for (const auto& t : r.per_type) {
    per_type[t.organism_type] = t.accuracy;
    sizes[t.organism_type] = t.classes;
  }
  j["per_type"] = std::move(per_type);
  j["type_sizes"] = std::move(sizes);
  return j.dump(2) + "\n";
}

ReportDocument parse_report(std::string_view text) {
  try {
    const auto j = ordered_json::parse(text);
    ReportDocument doc;
    doc.dataset = j.value("dataset", std::string());
    doc.strategy = j.value("strategy", std::string());
    doc.images = j.value("images", std::size_t{0});
    doc.report.macro_accuracy = j.at("macro_accuracy").get<double>();
    const auto& counts = j.contains("per_class_counts") ? j["per_class_counts"] : ordered_json();
    for (const auto& [id, acc] : j.at("per_class").items()) {
      ClassAccuracy c{id, 0, 0, acc.get<double>()};
      if (counts.is_object() && counts.contains(id)) {
        c.correct = counts[id].at(0).get<std::size_t>();
        c.total = counts[id].at(1).get<std::size_t>();
      }
      doc.report.per_class.push_back(std::move(c));
    }
    if (j.at("K").get<std::size_t>() != doc.report.per_class.size()) {
      throw ParseError(0, "K disagrees with the number of per_class entries");
    }
    if (j.contains("per_type")) {
      const auto& sizes = j.contains("type_sizes") ? j["type_sizes"] : ordered_json();
      for (const auto& [type, acc] : j["per_type"].items()) {
        TypeAccuracy t{type, 0, acc.get<double>()};
        if (sizes.is_object() && sizes.contains(type)) t.classes = sizes[type].get<std::size_t>();
        doc.report.per_type.push_back(std::move(t));
      }
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("invalid report JSON: ") + e.what());
  }
}

ReportDocument read_report_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open report '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_report(buffer.str());
  } catch (const ParseError& e) {
    throw e.with_source(path);
  }
}

std::vector<LabeledImage> read_labels(std::istream& in) {
  std::vector<LabeledImage> labels;
  std::unordered_set<std::string> seen;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = chomp(raw);
    if (trim(line).empty() || line.front() == '#') continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 2) throw ParseError(line_no, "expected 'image_id<TAB>species_id'");
    LabeledImage l{std::string(trim(fields[0])), std::string(trim(fields[1]))};
    if (l.image_id.empty() || l.species_id.empty()) throw ParseError(line_no, "empty id");
    if (!seen.insert(l.image_id).second) {
      throw ParseError(line_no, "duplicate image id '" + l.image_id + "'");
    }
    labels.push_back(std::move(l));
  }
  return labels;
}

std::vector<LabeledImage> read_labels_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open labels '" + path + "'");
  try {
    return read_labels(in);
  } catch (const ParseError& e) {
    throw e.with_source(path);
  }
}

void write_predictions(std::span<const ImagePrediction> rows, std::ostream& out) {
  for (const auto& r : rows) {
    out << r.image_id << '\t' << r.true_id << '\t' << r.predicted_id << '\n';
  }
}

}  // namespace zsr
