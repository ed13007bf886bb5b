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
#include "zsr/corpus_freq.hpp"

namespace {

using zsr::testing::Rng;

struct Fixture {
  std::vector<std::string> names;
  std::vector<std::string> corpus;
  zsr::PatternSet patterns;
};

const Fixture& fixture(std::size_t names) {
  static std::unordered_map<std::size_t, Fixture> cache;
  auto it = cache.find(names);
  if (it == cache.end()) {
    Rng rng(7);
    Fixture f;
    f.names = zsr::testing::random_names(names, rng);
    f.corpus = zsr::testing::random_corpus(20000, f.names, rng);
    f.patterns = zsr::PatternSet(f.names);
    it = cache.emplace(names, std::move(f)).first;
  }
  return it->second;
}

void BM_CountOccurrences(benchmark::State& state) {
  const auto& f = fixture(static_cast<std::size_t>(state.range(0)));
  std::size_t bytes = 0;
  for (const auto& l : f.corpus) bytes += l.size();
  for (auto _ : state) {
    benchmark::DoNotOptimize(zsr::count_occurrences(f.corpus, f.patterns));
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * bytes));
}
BENCHMARK(BM_CountOccurrences)->Arg(100)->Arg(1000)->Arg(10000);

void BM_CountSharded(benchmark::State& state) {
  const auto& f = fixture(1000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        zsr::count_sharded(f.corpus, f.patterns, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_CountSharded)->Arg(1)->Arg(2)->Arg(4);

void BM_BuildPatternSet(benchmark::State& state) {
  Rng rng(11);
  const auto names = zsr::testing::random_names(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(zsr::PatternSet(names));
}
BENCHMARK(BM_BuildPatternSet)->Arg(1000)->Arg(10000);

}  // namespace
