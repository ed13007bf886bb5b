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

#include "report_table.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "zsr/prompts.hpp"

namespace zsr::cli {
namespace {

struct Row {
  std::string key;    // strategy string as stored in the report
  std::string label;  // display label
  std::size_t rank;   // position in benchmark order; unknown strategies sort last
};

std::string strategy_label(const Strategy& s, bool nested) {
  std::string base;
  switch (s.name_choice) {
    case NameChoice::kScientific: base = "S-name"; break;
    case NameChoice::kCommon: base = "C-name"; break;
    case NameChoice::kFrequent: base = "F-name"; break;
  }
  if (!s.with_descriptions) return base;
  return nested ? "+ descriptions" : base + " + descriptions";
}

Row make_row(const std::string& key, std::size_t fallback_rank) {
  const auto parsed = parse_strategy(key);
  if (!parsed) return {key, key.empty() ? "(unlabeled)" : key, fallback_rank};
  const auto all = all_strategies();
  const auto pos = static_cast<std::size_t>(std::find(all.begin(), all.end(), *parsed) - all.begin());
  return {key, strategy_label(*parsed, true), pos};
}

std::string column_label(const std::string& key) {
  const auto parsed = parse_strategy(key);
  return parsed ? strategy_label(*parsed, false) : key;
}

std::string percent(double fraction) { return fmt::format("{:.2f}%", fraction * 100.0); }

using Grid = std::vector<std::vector<std::string>>;  // first row = header

std::string render_grid(const Grid& grid, TableFormat format) {
  std::string out;
  if (grid.empty()) return out;
  const std::size_t cols = grid.front().size();
  if (format == TableFormat::kMarkdown) {
    auto line = [&](const std::vector<std::string>& cells) {
      out += "|";
      for (const auto& c : cells) out += " " + c + " |";
      out += "\n";
    };
    line(grid.front());
    out += "|---|";
    for (std::size_t c = 1; c < cols; ++c) out += "---:|";
    out += "\n";
    for (std::size_t r = 1; r < grid.size(); ++r) line(grid[r]);
    return out;
  }
  std::vector<std::size_t> width(cols, 0);
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < cols; ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (std::size_t r = 0; r < grid.size(); ++r) {
    std::string line;
    for (std::size_t c = 0; c < cols; ++c) {
      const std::string& cell = grid[r][c];
      if (c == 0) {
        // Nested "+ descriptions" rows are indented under their base row.
        const bool nested = r > 0 && cell.rfind("+ ", 0) == 0;
        line += fmt::format("{:<{}}", (nested ? "  " : "") + cell, width[0] + 2);
      } else {
        line += fmt::format("  {:>{}}", cell, width[c]);
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

}  // namespace

std::string render_report_table(std::span<const ReportDocument> reports, TableFormat format,
                                std::vector<std::string>& warnings) {
  std::vector<std::string> datasets;
  std::vector<Row> rows;
  std::map<std::pair<std::string, std::string>, const ReportDocument*> cell;
  std::map<std::string, std::set<std::string>> class_sets;

  for (const auto& doc : reports) {
    if (std::find(datasets.begin(), datasets.end(), doc.dataset) == datasets.end()) {
      datasets.push_back(doc.dataset);
    }
    if (std::none_of(rows.begin(), rows.end(), [&](const Row& r) { return r.key == doc.strategy; })) {
      rows.push_back(make_row(doc.strategy, all_strategies().size() + rows.size()));
    }
    if (!cell.emplace(std::make_pair(doc.strategy, doc.dataset), &doc).second) {
      warnings.push_back("duplicate report for strategy '" + doc.strategy + "' on dataset '" +
                         doc.dataset + "'; keeping the first");
    }
    std::set<std::string> classes;
    for (const auto& c : doc.report.per_class) classes.insert(c.species_id);
    const auto [it, inserted] = class_sets.emplace(doc.dataset, classes);
    if (!inserted && it->second != classes) {
      warnings.push_back("reports for dataset '" + doc.dataset + "' cover different class sets");
    }
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const Row& a, const Row& b) { return a.rank < b.rank; });

  Grid grid;
  grid.push_back({"Prompt Method"});
  for (const auto& d : datasets) {
    const auto& first = *std::find_if(reports.begin(), reports.end(),
                                      [&](const ReportDocument& r) { return r.dataset == d; });
    grid.front().push_back(fmt::format("{} ({}-way)", d.empty() ? "(unnamed)" : d,
                                       first.report.K()));
  }
  for (const auto& row : rows) {
    std::vector<std::string> line{row.label};
    for (const auto& d : datasets) {
      const auto it = cell.find({row.key, d});
      line.push_back(it == cell.end() ? "-" : percent(it->second->report.macro_accuracy));
    }
    grid.push_back(std::move(line));
  }
  std::string out = render_grid(grid, format);

  for (const auto& d : datasets) {
    std::vector<const ReportDocument*> with_types;
    for (const auto& row : rows) {
      const auto it = cell.find({row.key, d});
      if (it != cell.end() && !it->second->report.per_type.empty()) with_types.push_back(it->second);
    }
    if (with_types.empty()) continue;

    std::vector<std::string> types;
    std::map<std::string, std::size_t> sizes;
    for (const auto* doc : with_types) {
      for (const auto& t : doc->report.per_type) {
        if (sizes.emplace(t.organism_type, t.classes).second) types.push_back(t.organism_type);
      }
    }
    Grid section;
    section.push_back({"Species Type"});
    for (const auto* doc : with_types) section.front().push_back(column_label(doc->strategy));
    for (const auto& type : types) {
      std::vector<std::string> line{fmt::format("{} ({})", type, sizes[type])};
      for (const auto* doc : with_types) {
        const auto& pt = doc->report.per_type;
        const auto it = std::find_if(pt.begin(), pt.end(), [&](const TypeAccuracy& t) {
          return t.organism_type == type;
        });
        line.push_back(it == pt.end() ? "-" : percent(it->accuracy));
      }
      section.push_back(std::move(line));
    }
    const std::string title = "Per-type accuracy: " + (d.empty() ? "(unnamed)" : d);
    out += format == TableFormat::kMarkdown ? "\n### " + title + "\n\n" : "\n" + title + "\n";
    out += render_grid(section, format);
  }
  return out;
}

}  // namespace zsr::cli
