// Copyright 2026 The lpstab Authors. All Rights Reserved.
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

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "lpstab/convexity.hpp"
#include "lpstab/holder.hpp"
#include "lpstab/interpolation.hpp"
#include "lpstab/measure.hpp"
#include "lpstab/modulus.hpp"

namespace {

using lpstab::SimpleFunction;

SimpleFunction random_function(const lpstab::SpacePtr& s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::lognormal_distribution<double> d(0.0, 2.0);
  std::vector<double> v(s->size());
  for (auto& x : v) x = d(rng) * (rng() & 1 ? 1.0 : -1.0);
  return {s, v};
}

void BM_Norm(benchmark::State& state) {
  const auto s = lpstab::MeasureSpace::uniform(static_cast<std::size_t>(state.range(0)));
  const auto f = random_function(s, 1);
  for (auto _ : state) benchmark::DoNotOptimize(lpstab::norm(f, 3.7));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Norm)->Arg(64)->Arg(4096)->Arg(100000);

void BM_HolderReport(benchmark::State& state) {
  const auto s = lpstab::MeasureSpace::uniform(static_cast<std::size_t>(state.range(0)));
  const auto f = random_function(s, 2), g = random_function(s, 3);
  for (auto _ : state) benchmark::DoNotOptimize(lpstab::holder_report(f, g, 3.0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_HolderReport)->Arg(64)->Arg(4096);

void BM_ContainmentBounds(benchmark::State& state) {
  const auto s = lpstab::MeasureSpace::uniform(static_cast<std::size_t>(state.range(0)));
  const auto f = random_function(s, 4);
  for (auto _ : state) benchmark::DoNotOptimize(lpstab::containment_bounds(f, 1.5, 4.0));
}
BENCHMARK(BM_ContainmentBounds)->Arg(64)->Arg(4096);

void BM_RefinedMinkowski(benchmark::State& state) {
  const auto s = lpstab::MeasureSpace::uniform(64);
  const auto f = random_function(s, 5), h = random_function(s, 6);
  for (auto _ : state) benchmark::DoNotOptimize(lpstab::refined_minkowski(f, h, 2.5));
}
BENCHMARK(BM_RefinedMinkowski);

void BM_EstimateModulus(benchmark::State& state) {
  lpstab::SearchConfig cfg;
  cfg.restarts = static_cast<int>(state.range(1));
  cfg.parallel = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lpstab::estimate_modulus(3.0, static_cast<int>(state.range(0)), 0.5, cfg));
  }
}
BENCHMARK(BM_EstimateModulus)->Args({2, 4})->Args({5, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
