// Copyright 2026 The davn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "davn/lhv.hpp"
#include "davn/postselect.hpp"
#include "davn/sample.hpp"
#include "davn/states.hpp"

namespace {

void BM_BuildPsi1234(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(davn::build_psi_1234());
}
BENCHMARK(BM_BuildPsi1234);

void BM_ReducedDensity(benchmark::State& state) {
    const auto s = davn::build_psi_1234();
    for (auto _ : state) benchmark::DoNotOptimize(davn::reduced_density(s, 0));
}
BENCHMARK(BM_ReducedDensity);

void BM_TableForOutcome(benchmark::State& state) {
    const auto s = davn::build_psi_1234();
    const davn::OutcomeTuple o{3, 0, 2, 3};
    for (auto _ : state) benchmark::DoNotOptimize(davn::table_for_outcome(s, o));
}
BENCHMARK(BM_TableForOutcome);

void BM_VerifyParadox(benchmark::State& state) {
    const auto s = davn::build_psi_1234();
    const davn::OutcomeTuple o{0, 0, 2, 2};
    for (auto _ : state) benchmark::DoNotOptimize(davn::verify_paradox(s, o));
}
BENCHMARK(BM_VerifyParadox);

void BM_VerifyDavn(benchmark::State& state) {
    const auto s = davn::build_psi_1234();
    const auto workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(davn::verify_davn(s, workers));
}
BENCHMARK(BM_VerifyDavn)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Sample56000(benchmark::State& state) {
    const auto s = davn::build_psi_1234();
    for (auto _ : state) benchmark::DoNotOptimize(davn::sample_outcomes(s, 56000, 42));
}
BENCHMARK(BM_Sample56000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
