// Copyright 2026 The dtk Authors
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

#include "dtk/harness.hpp"
#include "dtk/io.hpp"

namespace dtk {
namespace {

const FixtureSet& fixtures() {
  static const FixtureSet fs = load_fixtures(DTK_FIXTURE_DIR);
  return fs;
}

void BM_KValue(benchmark::State& state) {
  for (auto _ : state) {
    for (int n = 1; n <= 8; ++n) {
      for (int t = 1; t <= n; ++t) benchmark::DoNotOptimize(k_value(t, n));
    }
  }
}
BENCHMARK(BM_KValue);

void BM_Neighborhood(benchmark::State& state) {
  const ImagePtr img = fixtures().curves.back().second;
  const Point x = img->point(0);
  const int eps = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(neighborhood(*img, x, eps));
}
BENCHMARK(BM_Neighborhood)->Arg(1)->Arg(2)->Arg(4);

void BM_CoveringR1(benchmark::State& state) {
  const DigitalMap& m = fixtures().map("z_sc8_l8");
  for (auto _ : state) benchmark::DoNotOptimize(is_covering_r1(m));
}
BENCHMARK(BM_CoveringR1);

void BM_PseudoCoveringV2(benchmark::State& state) {
  const DigitalMap& m = fixtures().map("zplus_sc8_l8");
  for (auto _ : state) benchmark::DoNotOptimize(is_pseudo_covering_v2(m));
}
BENCHMARK(BM_PseudoCoveringV2);

void BM_EnumerateSurjections(benchmark::State& state) {
  CorpusSpec spec;
  spec.max_points = static_cast<int>(state.range(0));
  const auto images = enumerate_images(spec).images;
  for (auto _ : state) {
    std::int64_t n = 0;
    for (const auto& x : images) {
      for (const auto& y : images) {
        n += enumerate_maps(x, y, {true, false}, [](const DigitalMap&) { return true; });
      }
    }
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_EnumerateSurjections)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_DTEmbedding(benchmark::State& state) {
  const auto& curves = fixtures().curves;
  for (auto _ : state) {
    for (const auto& [a, x] : curves) {
      for (const auto& [b, y] : curves) benchmark::DoNotOptimize(exists_DT_embedding(x, y));
    }
  }
}
BENCHMARK(BM_DTEmbedding)->Unit(benchmark::kMillisecond);

void BM_UniqueLifting(benchmark::State& state) {
  const DigitalMap& m = fixtures().map("z_sc8_l6");
  const int len = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_unique_lifting(m, len));
}
BENCHMARK(BM_UniqueLifting)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace dtk

BENCHMARK_MAIN();
