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

#include <span>
#include <string>
#include <vector>

#include "zsr/report_io.hpp"

namespace zsr::cli {

enum class TableFormat { kText, kMarkdown };

/// Strategy x dataset accuracy table, rows in benchmark order
/// (s-name, +descriptions, c-name, +descriptions, f-name, +descriptions),
/// followed by one per-type section per dataset that has breakdowns.
/// Inconsistencies (different class sets within a dataset, duplicate cells)
/// are reported through `warnings`; they never abort rendering.
std::string render_report_table(std::span<const ReportDocument> reports, TableFormat format,
                                std::vector<std::string>& warnings);

}  // namespace zsr::cli
