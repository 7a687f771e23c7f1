// Copyright 2026 The Authors.
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

#include "probing/cr_schemes.hpp"
#include "probing/fixtures.hpp"
#include "probing/greedy.hpp"
#include "probing/lp.hpp"
#include "probing/policy_eval.hpp"
#include "probing/simplex.hpp"

namespace {

probing::ProbingInstance make_instance(int n, bool weighted) {
  probing::Rng rng(static_cast<std::uint64_t>(n));
  probing::RandomInstanceOptions options;
  options.min_size = options.max_size = static_cast<std::size_t>(n);
  options.weighted = weighted;
  return probing::random_instance(options, rng);
}

void BM_Simplex(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  probing::Rng rng(n);
  probing::LinearProgram lp;
  for (std::size_t j = 0; j < n; ++j) lp.objective.push_back(probing::uniform01(rng));
  for (std::size_t i = 0; i < 2 * n; ++i) {
    std::vector<double> row(n);
    for (double& a : row) a = probing::uniform01(rng);
    lp.add_row(std::move(row), 1.0 + probing::uniform01(rng));
  }
  for (auto _ : state) benchmark::DoNotOptimize(probing::solve_lp(lp));
}
BENCHMARK(BM_Simplex)->RangeMultiplier(2)->Range(8, 64);

void BM_ProbingLp(benchmark::State& state) {
  const auto inst = make_instance(static_cast<int>(state.range(0)), true);
  for (auto _ : state) benchmark::DoNotOptimize(probing::solve_probing_lp(inst));
}
BENCHMARK(BM_ProbingLp)->DenseRange(4, 12, 4);

void BM_OptimalAdaptive(benchmark::State& state) {
  const auto inst = make_instance(static_cast<int>(state.range(0)), true);
  for (auto _ : state) benchmark::DoNotOptimize(probing::optimal_adaptive(inst));
}
BENCHMARK(BM_OptimalAdaptive)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

void BM_ExactGreedy(benchmark::State& state) {
  const auto inst = make_instance(static_cast<int>(state.range(0)), false);
  for (auto _ : state) benchmark::DoNotOptimize(probing::exact_greedy_value(inst));
}
BENCHMARK(BM_ExactGreedy)->DenseRange(4, 12, 4);

void BM_Resolve(benchmark::State& state) {
  const auto inst = make_instance(static_cast<int>(state.range(0)), false);
  const auto solution = probing::solve_probing_lp(inst);
  const probing::ContentionResolver resolver({}, inst.inner(), solution.x);
  probing::Rng rng(1);
  probing::ElementSet all(inst.size());
  for (probing::ElementId e = 0; e < inst.size(); ++e) all.insert(e);
  for (auto _ : state) benchmark::DoNotOptimize(resolver.resolve(all, rng));
}
BENCHMARK(BM_Resolve)->DenseRange(4, 12, 4);

}  // namespace

BENCHMARK_MAIN();
