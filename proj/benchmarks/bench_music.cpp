// SPDX-License-Identifier: Apache-2.0
//
// madoa: movable-antenna array design and 2D DOA estimation
// Copyright (C) 2026 The madoa authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "madoa/geometry.hpp"
#include "madoa/music.hpp"
#include "madoa/signal.hpp"

#include <benchmark/benchmark.h>

using namespace madoa;

namespace {

void BM_PmaLayout(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_pma_layout(8.0, 0.5, n));
}
BENCHMARK(BM_PmaLayout)->Arg(36)->Arg(120);

void BM_HermitianEig(benchmark::State &state)
{
    const auto layout = build_pma_layout(8.0, 0.5, 36);
    const auto r = sample_covariance(synthesize_snapshots(layout, {{45, 60, 1}}, 100, 10, 1));
    for (auto _ : state)
        benchmark::DoNotOptimize(hermitian_eig(r));
}
BENCHMARK(BM_HermitianEig);

void BM_MusicSpectrum(benchmark::State &state)
{
    const auto layout = build_pma_layout(8.0, 0.5, 36);
    const auto k = static_cast<std::size_t>(state.range(0));
    SourceSet sources{{45, 60, 1}, {135, 115, 1}, {50, 60, 1}};
    sources.resize(k);
    const auto r = sample_covariance(synthesize_snapshots(layout, sources, 100, 10, 1));
    for (auto _ : state)
        benchmark::DoNotOptimize(music_spectrum(r, layout, k, 0.005));
}
BENCHMARK(BM_MusicSpectrum)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_FindPeaks(benchmark::State &state)
{
    const auto layout = build_pma_layout(8.0, 0.5, 36);
    const auto r = sample_covariance(synthesize_snapshots(layout, {{45, 60, 1}}, 1, 10, 1));
    const auto grid = music_spectrum(r, layout, 1, 0.005);
    for (auto _ : state)
        benchmark::DoNotOptimize(find_peaks(grid, 3));
}
BENCHMARK(BM_FindPeaks)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
