// SPDX-License-Identifier: Apache-2.0
//
// uavcov: coverage and backhaul analysis for urban UAV networks
// Copyright (C) 2026 The uavcov Authors
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

// Serial reference path against the OpenMP path for the main kernels.

#include <uavcov/analytic.hpp>
#include <uavcov/montecarlo.hpp>
#include <uavcov/parallel.hpp>

#include <benchmark/benchmark.h>

#include <vector>

using namespace uavcov;

namespace
{

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) ? "openmp" : "serial"); }

void BM_CoverageTrials(benchmark::State& state)
{
    Params p;
    for (auto _ : state)
        benchmark::DoNotOptimize(mc::estimate_coverage(p, 5000, 1, exec_of(state)));
    state.SetItemsProcessed(state.iterations() * 5000);
    label(state);
}

void BM_BackhaulTrials(benchmark::State& state)
{
    Params p;
    for (auto _ : state)
        benchmark::DoNotOptimize(mc::estimate_backhaul(p, 150, 5000, 1, exec_of(state)));
    state.SetItemsProcessed(state.iterations() * 5000);
    label(state);
}

void BM_ScenarioTrials(benchmark::State& state)
{
    Params p;
    mc::ScenarioOptions so;
    so.gamma_init = 50;
    for (auto _ : state)
        benchmark::DoNotOptimize(mc::estimate_scenario(p, so, 50, 1, exec_of(state)));
    state.SetItemsProcessed(state.iterations() * 50);
    label(state);
}

void BM_AnalyticHeightSweep(benchmark::State& state)
{
    std::vector<double> grid;
    for (double g = 20; g <= 300; g += 20)
        grid.push_back(g);
    std::vector<double> out(grid.size());
    for (auto _ : state)
    {
        for_each_index(grid.size(), exec_of(state), [&](std::size_t i) {
            Params p;
            p.uav.gamma = grid[i];
            out[i] = analytic::coverage_probability(p).p_cov;
        });
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(grid.size()));
    label(state);
}

void BM_ConditionalCoverage(benchmark::State& state)
{
    const analytic::CoverageModel m(Params{});
    double r = 1;
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(m.conditional_coverage(r, LinkState::Los));
        r = r > 400 ? 1 : r + 7.3;
    }
}

} // namespace

BENCHMARK(BM_CoverageTrials)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BackhaulTrials)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScenarioTrials)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AnalyticHeightSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConditionalCoverage)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
