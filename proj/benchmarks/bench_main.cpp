// SPDX-License-Identifier: Apache-2.0
//
// lightpoint - layered ray tracing and aRIS deployment library for underwater acoustic MIMO
// Copyright (C) 2026 The lightpoint authors
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

#include "lightpoint/beamform.hpp"
#include "lightpoint/capacity.hpp"
#include "lightpoint/dofmap.hpp"
#include "lightpoint/raytrace.hpp"

#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

using namespace lightpoint;

namespace
{
    Environment munk()
    {
        Environment env;
        env.depth_H = 4000.0;
        env.profile = Munk{};
        return env;
    }

    Environment shallow()
    {
        Environment env;
        env.depth_H = 100.0;
        env.profile = LinearGradient{1500.0, 5e-5};
        return env;
    }

    TraceOptions options()
    {
        TraceOptions o;
        o.angle_grid = TraceOptions::uniform_grid_deg(-89.125, 89.0, 0.25);
        return o;
    }
}

static void BM_TraceRayMunk(benchmark::State &state)
{
    const Environment env = munk();
    const auto medium = discretize(env.profile, env.depth_H, static_cast<std::size_t>(state.range(0)));
    TraceOptions o = options();
    o.max_range = 50000.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(trace_ray(medium, env, {0.0, 1000.0}, 0.1, o));
}
BENCHMARK(BM_TraceRayMunk)->Arg(200)->Arg(400)->Arg(1000);

static void BM_FindEigenraysShallow(benchmark::State &state)
{
    const Environment env = shallow();
    const auto medium = discretize(env.profile, env.depth_H, 400);
    for (auto _ : state)
        benchmark::DoNotOptimize(find_eigenrays(medium, env, {0.0, 50.0}, {400.0, 50.0}, options()));
}
BENCHMARK(BM_FindEigenraysShallow)->Unit(benchmark::kMillisecond);

static void BM_FanProbe(benchmark::State &state)
{
    const Environment env = shallow();
    const auto medium = discretize(env.profile, env.depth_H, 400);
    TraceOptions o = options();
    o.max_range = 5000.0;
    const RayFan fan(medium, env, {0.0, 50.0}, o);
    double r = 100.0;
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(fan.eigenrays_to({r, 37.0}));
        r = r > 1000.0 ? 100.0 : r + 25.0;
    }
}
BENCHMARK(BM_FanProbe)->Unit(benchmark::kMicrosecond);

static void BM_SynthesizeTwoBeams(benchmark::State &state)
{
    MultiBeamProblem p;
    p.aris_side = {8, 0.5};
    p.target_aods = {-0.5, 0.5};
    p.g_req = {0.8};
    for (auto _ : state)
        benchmark::DoNotOptimize(synthesize_multibeam(p));
}
BENCHMARK(BM_SynthesizeTwoBeams)->Unit(benchmark::kMillisecond);

static void BM_TlMetric(benchmark::State &state)
{
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> ang(-1.0, 1.0), tl(40.0, 100.0);
    HopPaths h1, h2;
    for (auto *h : {&h1, &h2})
    {
        h->aperture_dep = h->aperture_arr = 2.924;
        for (int i = 0; i < 8; ++i)
        {
            h->tl_db.push_back(tl(rng));
            h->aod.push_back(ang(rng));
            h->aoa.push_back(ang(rng));
        }
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(tl_metric(h1, h2, 2));
}
BENCHMARK(BM_TlMetric);

static void BM_Capacity4x4(benchmark::State &state)
{
    const CMatrix h = CMatrix::Random(4, 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(capacity({h, 100.0, 0.98}));
}
BENCHMARK(BM_Capacity4x4);
BENCHMARK_MAIN();
