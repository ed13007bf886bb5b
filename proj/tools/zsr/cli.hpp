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

#include <ostream>
#include <string>
#include <vector>

#include "zsr/error.hpp"

namespace zsr::cli {

/// Process exit codes. Every failure also prints exactly one stderr line
/// `zsr: error[<kind>]: <message>`.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseFailure = 2,
  kFormatFailure = 3,
  kIoFailure = 4,
  kConfigFailure = 5,
  kDimensionMismatch = 6,
  kIdMismatch = 7,
  kMetricUndefined = 8,
  kInvalidInput = 9,
  kInternal = 10,
};

int exit_code_for(ErrorKind kind) noexcept;

/// Entry point shared by main() and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zsr::cli
