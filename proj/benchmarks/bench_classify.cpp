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
#include "zsr/classifier.hpp"

namespace {

using zsr::testing::Rng;

zsr::ClassModel make_model(std::size_t classes, std::size_t prompts, std::size_t dim, Rng& rng) {
  std::vector<zsr::ClassPrompts> c;
  for (std::size_t k = 0; k < classes; ++k) {
    zsr::ClassPrompts p{"c" + std::to_string(k), {}};
    for (std::size_t i = 0; i < prompts; ++i) p.embeddings.push_back(zsr::testing::random_unit(dim, rng));
    c.push_back(std::move(p));
  }
  return zsr::ClassModel(std::move(c));
}

zsr::EmbeddingMatrix make_images(std::size_t n, std::size_t dim, Rng& rng) {
  std::vector<std::string> ids;
  std::vector<float> data;
  for (std::size_t i = 0; i < n; ++i) {
    ids.push_back("i" + std::to_string(i));
    const auto v = zsr::testing::random_unit(dim, rng);
    data.insert(data.end(), v.begin(), v.end());
  }
  return zsr::EmbeddingMatrix(dim, std::move(ids), std::move(data));
}

// CLIP-sized problem: 512-d embeddings, 200 classes (Aves-like), 5 prompts each.
void BM_ClassifyAll(benchmark::State& state) {
  Rng rng(3);
  const auto model = make_model(200, 5, 512, rng);
  const auto images = make_images(2000, 512, rng);
  const auto threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zsr::classify_all(model, images, threads));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * images.rows()));
}
BENCHMARK(BM_ClassifyAll)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_BuildModel(benchmark::State& state) {
  Rng rng(5);
  std::vector<zsr::ClassPrompts> c;
  for (std::size_t k = 0; k < 1000; ++k) {
    zsr::ClassPrompts p{"c" + std::to_string(k), {}};
    for (int i = 0; i < 5; ++i) p.embeddings.push_back(zsr::testing::random_unit(512, rng));
    c.push_back(std::move(p));
  }
  for (auto _ : state) benchmark::DoNotOptimize(zsr::ClassModel(c));
}
BENCHMARK(BM_BuildModel)->Unit(benchmark::kMillisecond);

}  // namespace
