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

#include "lightpoint/env.hpp"
#include "lightpoint/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

using namespace lightpoint;

TEST(SoundSpeed, MunkAxisIsReferenceSpeed)
{
    EXPECT_DOUBLE_EQ(sound_speed(Munk{1500, 7e-3, 1000, 1000}, 1000.0), 1500.0);
}

TEST(SoundSpeed, LinearGradientSurface)
{
    EXPECT_DOUBLE_EQ(sound_speed(LinearGradient{1500, 1e-4}, 0.0), 1500.0);
    EXPECT_DOUBLE_EQ(sound_speed(LinearGradient{1500, 1e-4}, 100.0), 1500.0 * (1.0 - 1e-2));
}

TEST(SoundSpeed, MunkOneScaleDepthBelowAxis)
{
    // eta = 1: bracket is 1 + e^-1 - 1 = e^-1.
    EXPECT_NEAR(sound_speed(Munk{1500, 7e-3, 1000, 1000}, 2000.0), 1500.0 * (1.0 + 7e-3 * std::exp(-1.0)), 1e-9);
}

TEST(SoundSpeed, TabulatedInterpolatesAndRejectsExtrapolation)
{
    const Tabulated t{{{0.0, 1500.0}, {100.0, 1480.0}}};
    EXPECT_DOUBLE_EQ(sound_speed(t, 25.0), 1495.0);
    EXPECT_DOUBLE_EQ(sound_speed(t, 100.0), 1480.0);
    EXPECT_THROW(sound_speed(t, 100.5), DepthOutOfRange);
}

TEST(Validate, ProfilesAndEnvironment)
{
    EXPECT_THROW(validate(SoundSpeedProfile{Munk{1500, 0.0, 1000, 1000}}), ValidationError);
    EXPECT_THROW(validate(SoundSpeedProfile{Munk{1500, 7e-3, 1000, 0.0}}), ValidationError);
    EXPECT_THROW(validate(SoundSpeedProfile{Tabulated{{{0.0, 1500.0}}}}), ValidationError);
    EXPECT_THROW(validate(SoundSpeedProfile{Tabulated{{{10.0, 1500.0}, {5.0, 1490.0}}}}), ValidationError);
    Environment env;
    env.depth_H = -1.0;
    EXPECT_THROW(validate(env), ValidationError);
    env = {};
    env.bottom_loss_db = -3.0;
    EXPECT_THROW(validate(env), ValidationError);
}

TEST(Discretize, LayersUseMidpointSpeeds)
{
    const LinearGradient p{1500, 1e-4};
    const LayeredMedium m = discretize(p, 100.0, 4);
    ASSERT_EQ(m.size(), 4u);
    for (std::size_t i = 0; i < 4; ++i)
    {
        EXPECT_DOUBLE_EQ(m.layers()[i].h, 25.0);
        EXPECT_DOUBLE_EQ(m.speed(i), sound_speed(p, 12.5 + 25.0 * static_cast<double>(i)));
    }
}

TEST(Discretize, ThicknessesSumToDepth)
{
    for (std::size_t M : {1u, 3u, 7u, 400u, 1000u})
    {
        const LayeredMedium m = discretize(Munk{}, 4000.0, M);
        const double sum = std::accumulate(m.layers().begin(), m.layers().end(), 0.0,
                                           [](double a, const Layer &l) { return a + l.h; });
        EXPECT_NEAR(sum, 4000.0, 4000.0 * 1e-9);
        EXPECT_NEAR(m.total_depth(), 4000.0, 4000.0 * 1e-9);
        for (const auto &l : m.layers())
            EXPECT_GT(l.c, 0.0);
    }
}

TEST(Discretize, ZeroLayersRejected)
{
    EXPECT_THROW(discretize(Munk{}, 4000.0, 0), InvalidLayerCount);
}

TEST(LayeredMedium, LayerLookup)
{
    const LayeredMedium m({{1500, 10}, {1510, 10}, {1520, 10}});
    EXPECT_EQ(m.layer_at(0.0), 0u);
    EXPECT_EQ(m.layer_at(9.99), 0u);
    EXPECT_EQ(m.layer_at(10.0), 1u);
    EXPECT_EQ(m.layer_at(30.0), 2u);
    EXPECT_DOUBLE_EQ(m.speed_at(25.0), 1520.0);
    EXPECT_FALSE(m.is_constant());
    EXPECT_TRUE(LayeredMedium({{1500, 5}, {1500, 5}}).is_constant());
    EXPECT_THROW(LayeredMedium(std::vector<Layer>{}), InvalidLayerCount);
}

TEST(CriticalAngle, MatchesSnellConstant)
{
    const double a = critical_grazing_angle(1500.0, 1520.0);
    EXPECT_NEAR(std::cos(a), 1500.0 / 1520.0, 1e-15);
    EXPECT_THROW(critical_grazing_angle(1530.0, 1520.0), NoCriticalAngle);
}
