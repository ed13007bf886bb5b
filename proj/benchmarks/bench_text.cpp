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

#include <benchmark/benchmark.h>

#include "synthetic.hpp"
#include "zsr/text.hpp"

namespace {

void BM_NormalizeAscii(benchmark::State& state) {
  zsr::testing::Rng rng(1);
  const auto names = zsr::testing::random_names(64, rng);
  const auto corpus = zsr::testing::random_corpus(256, names, rng);
  std::string out;
  for (auto _ : state) {
    for (const auto& line : corpus) {
      out.clear();
      zsr::append_normalized_token_form(line, out);
      benchmark::DoNotOptimize(out);
    }
  }
}
BENCHMARK(BM_NormalizeAscii);

void BM_NormalizeUnicode(benchmark::State& state) {
  const std::string s = "\xEF\xAC\x81sh\xC2\xA0Hawk  \xC3\x9C" "BER Caf\x65\xCC\x81 na\xC3\xAFve";
  for (auto _ : state) benchmark::DoNotOptimize(zsr::normalize_name(s));
}
BENCHMARK(BM_NormalizeUnicode);

void BM_ValidateUtf8(benchmark::State& state) {
  const std::string s(4096, 'a');
  for (auto _ : state) benchmark::DoNotOptimize(zsr::is_valid_utf8(s));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * s.size()));
}
BENCHMARK(BM_ValidateUtf8);

}  // namespace
