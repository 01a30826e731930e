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

#include "lightpoint/channel.hpp"
#include "lightpoint/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace lightpoint;

namespace
{
    // Exhaustive search for the largest pairwise-separated subset.
    std::size_t brute_force_resolvable(const std::vector<double> &angles, double aperture)
    {
        const std::size_t n = angles.size();
        std::size_t best = 0;
        for (unsigned mask = 0; mask < (1u << n); ++mask)
        {
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i)
                for (std::size_t k = i + 1; k < n && ok; ++k)
                    if ((mask >> i & 1u) && (mask >> k & 1u) && std::abs(angles[i] - angles[k]) < 1.0 / aperture)
                        ok = false;
            if (ok)
                best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
        }
        return best;
    }

    const ArrayGeometry tx{4, 0.731};
    const ArrayGeometry aris{8, 0.3655};
}

TEST(SteeringVector, Examples)
{
    const CVector one = steering_vector({1, 0.5}, 0.3);
    ASSERT_EQ(one.size(), 1);
    EXPECT_NEAR(std::abs(one(0) - cdouble(1.0)), 0.0, 1e-15);

    const CVector flat = steering_vector({4, 0.5}, 0.0);
    for (Eigen::Index i = 0; i < 4; ++i)
        EXPECT_NEAR(std::abs(flat(i) - cdouble(0.5)), 0.0, 1e-15);

    const CVector alt = steering_vector({2, 0.5}, 1.0);
    EXPECT_NEAR(std::abs(alt(0) - cdouble(1.0 / std::sqrt(2.0))), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(alt(1) + cdouble(1.0 / std::sqrt(2.0))), 0.0, 1e-15);
}

TEST(SteeringVector, UnitNormAndBoundedInnerProduct)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int k = 0; k < 200; ++k)
    {
        const double a = u(rng), b = u(rng);
        const CVector ea = steering_vector(tx, a);
        const CVector eb = steering_vector(tx, b);
        EXPECT_NEAR(ea.norm(), 1.0, 1e-12);
        EXPECT_LE(std::abs(ea.dot(eb)), 1.0 + 1e-12);
    }
    EXPECT_NEAR(std::abs(steering_vector(tx, 0.2).dot(steering_vector(tx, 0.2))), 1.0, 1e-12);
}

TEST(AssembleDirect, RankExamples)
{
    EXPECT_TRUE(assemble_direct({}, tx, tx).isZero());

    const std::vector<PathParam> one{{1.0, 0.1, -0.2}};
    EXPECT_EQ(numerical_rank(assemble_direct(one, tx, tx), 1e-9), 1u);

    const std::vector<PathParam> two{{1.0, -0.3, -0.3}, {1.0, 0.3, 0.3}};
    EXPECT_GE(0.6, 1.0 / tx.aperture());
    EXPECT_EQ(numerical_rank(assemble_direct(two, tx, tx), 1e-9), 2u);

    const CMatrix h = assemble_direct(one, tx, {3, 0.5});
    EXPECT_EQ(h.rows(), 3);
    EXPECT_EQ(h.cols(), 4);
}

TEST(AssembleArisSide, KroneckerStructure)
{
    const std::vector<PathParam> p{{cdouble(0.3, 0.4), 0.2, -0.1}};
    const CMatrix h1 = assemble_tx_aris(p, tx, aris);
    ASSERT_EQ(h1.rows(), 64);
    ASSERT_EQ(h1.cols(), 4);
    EXPECT_EQ(numerical_rank(h1), 1u);
    // Rows within one vertical block are identical.
    for (Eigen::Index v = 0; v < 8; ++v)
        for (Eigen::Index k = 1; k < 8; ++k)
            EXPECT_LT((h1.row(v * 8 + k) - h1.row(v * 8)).norm(), 1e-14);

    const CMatrix h2 = assemble_aris_rx(p, aris, tx);
    ASSERT_EQ(h2.rows(), 4);
    ASSERT_EQ(h2.cols(), 64);
    EXPECT_EQ(numerical_rank(h2), 1u);
    for (Eigen::Index v = 0; v < 8; ++v)
        for (Eigen::Index k = 1; k < 8; ++k)
            EXPECT_LT((h2.col(v * 8 + k) - h2.col(v * 8)).norm(), 1e-14);
}

TEST(AssembleArisSide, SingleElementReducesToDirect)
{
    const std::vector<PathParam> p{{cdouble(0.5, -0.2), 0.4, 0.1}, {cdouble(-0.1, 0.3), -0.5, 0.6}};
    const ArrayGeometry a1{1, 0.5};
    EXPECT_LT((assemble_tx_aris(p, tx, a1) - assemble_direct(p, tx, a1)).norm(), 1e-14);
    EXPECT_LT((assemble_aris_rx(p, a1, tx) - assemble_direct(p, a1, tx)).norm(), 1e-14);
}

TEST(ResolvableCount, Examples)
{
    EXPECT_EQ(resolvable_count(std::vector<double>{0.3}, 4.0), 1u);
    EXPECT_EQ(resolvable_count(std::vector<double>{0.0, 0.5}, 4.0), 2u);
    EXPECT_EQ(resolvable_count(std::vector<double>{0.0, 0.1, 0.5}, 4.0), 2u);
    EXPECT_EQ(brute_force_resolvable({0.0, 0.1, 0.5}, 4.0), 2u);
    EXPECT_EQ(resolvable_count(std::vector<double>{}, 4.0), 0u);
}

TEST(ResolvableCount, MatchesBruteForce)
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<int> n(1, 9);
    for (int k = 0; k < 300; ++k)
    {
        std::vector<double> a(static_cast<std::size_t>(n(rng)));
        for (auto &x : a)
            x = u(rng);
        const double aperture = 1.0 + 4.0 * (u(rng) + 1.0);
        EXPECT_EQ(resolvable_count(a, aperture), brute_force_resolvable(a, aperture));
        const auto idx = resolvable_subset(a, aperture);
        EXPECT_EQ(idx.size(), resolvable_count(a, aperture));
        for (std::size_t i = 1; i < idx.size(); ++i)
            EXPECT_GE(a[idx[i]] - a[idx[i - 1]], 1.0 / aperture - 1e-15);
    }
}

TEST(ChannelDof, Examples)
{
    EXPECT_EQ(channel_dof({}, tx, tx), 0u);
    EXPECT_EQ(channel_dof(std::vector<PathParam>{{1.0, 0.0, 0.0}}, tx, tx), 1u);
    const std::vector<PathParam> three{{1.0, -0.6, 0.6}, {1.0, 0.0, 0.0}, {1.0, 0.6, -0.6}};
    EXPECT_EQ(channel_dof(three, tx, tx), 3u);
    const std::vector<PathParam> clustered{{1.0, -0.6, 0.01}, {1.0, 0.0, 0.0}, {1.0, 0.6, -0.01}};
    EXPECT_EQ(channel_dof(clustered, tx, tx), 1u);
    EXPECT_EQ(brute_force_resolvable({0.01, 0.0, -0.01}, tx.aperture()), 1u);
    EXPECT_EQ(brute_force_resolvable({-0.6, 0.0, 0.6}, tx.aperture()), 3u);
}

TEST(ChannelDof, AgreesWithRankWhenWellSeparated)
{
    // Angles on a lattice of 2/A (well separated) with repeats (coincident).
    // Half-wavelength spacing keeps the lattice free of grating lobes.
    const ArrayGeometry g{8, 0.5};
    const double step = 2.0 / g.aperture();
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> slot(-1, 1);
    std::uniform_real_distribution<double> ph(0.0, 2.0 * M_PI);
    for (int k = 0; k < 100; ++k)
    {
        std::vector<PathParam> p;
        for (int l = 0; l < 3; ++l)
        {
            const int s = slot(rng);
            p.push_back({std::polar(1.0, ph(rng)), s * step, s * step});
        }
        const CMatrix h = assemble_direct(p, g, g);
        EXPECT_EQ(numerical_rank(h), channel_dof(p, g, g));
    }
}

TEST(ChannelDof, PhaseInvariance)
{
    const std::vector<PathParam> p{{cdouble(0.2, 0.1), -0.5, 0.4}, {cdouble(-0.3, 0.7), 0.1, -0.2},
                                   {cdouble(0.05, 0.0), 0.6, 0.7}};
    const cdouble u = std::polar(1.0, 1.234);
    std::vector<PathParam> q = p;
    for (auto &x : q)
        x.gain *= u;
    EXPECT_EQ(channel_dof(p, tx, tx), channel_dof(q, tx, tx));
    EXPECT_EQ(numerical_rank(assemble_direct(p, tx, tx)), numerical_rank(assemble_direct(q, tx, tx)));
    EXPECT_EQ(numerical_rank(assemble_tx_aris(p, tx, aris)), numerical_rank(assemble_tx_aris(q, tx, aris)));
}

TEST(EffectiveChannel, Examples)
{
    ChannelTriple t;
    const std::vector<PathParam> d{{1.0, 0.1, 0.2}};
    const std::vector<PathParam> s1{{cdouble(0.1, 0.2), -0.3, 0.4}, {0.5, 0.5, -0.1}};
    const std::vector<PathParam> s2{{cdouble(0.0, 0.7), 0.2, -0.6}};
    t.H = assemble_direct(d, tx, tx);
    t.H1 = assemble_tx_aris(s1, tx, aris);
    t.H2 = assemble_aris_rx(s2, aris, tx);

    EXPECT_LT((effective_channel(t, CVector::Zero(64)) - t.H).norm(), 1e-15);
    const CMatrix direct = t.H;
    t.H.setZero();
    EXPECT_LT((effective_channel(t, CVector::Ones(64)) - t.H2 * t.H1).norm(), 1e-12);
    t.H = direct;
    EXPECT_THROW(effective_channel(t, CVector::Ones(63)), DimensionMismatch);
}

TEST(EffectiveChannel, RankBounds)
{
    ChannelTriple t;
    t.H = assemble_direct(std::vector<PathParam>{{1.0, 0.1, 0.2}}, tx, tx);
    t.H1 = assemble_tx_aris(std::vector<PathParam>{{0.4, -0.6, 0.5}, {0.3, 0.0, 0.0}, {0.2, 0.6, -0.5}}, tx, aris);
    t.H2 = assemble_aris_rx(std::vector<PathParam>{{0.4, -0.5, -0.6}, {0.3, 0.5, 0.6}}, aris, tx);
    const std::size_t r1 = numerical_rank(t.H1), r2 = numerical_rank(t.H2), r0 = numerical_rank(t.H);
    std::mt19937_64 rng(17);
    std::normal_distribution<double> n(0.0, 1.0);
    for (int k = 0; k < 50; ++k)
    {
        CVector phi(64);
        for (auto &x : phi)
            x = {n(rng), n(rng)};
        const CMatrix cascade = t.H2 * phi.asDiagonal() * t.H1;
        EXPECT_LE(numerical_rank(cascade), std::min(r1, r2));
        EXPECT_LE(numerical_rank(effective_channel(t, phi)), r0 + std::min(r1, r2));
    }
}

TEST(NumericalRank, Examples)
{
    EXPECT_EQ(numerical_rank(CMatrix::Identity(3, 3)), 3u);
    EXPECT_EQ(numerical_rank(CMatrix::Zero(3, 3)), 0u);
    const CVector u = CVector::Unit(3, 0), v = CVector::Unit(4, 2);
    EXPECT_EQ(numerical_rank(u * v.adjoint()), 1u);
}

TEST(ToPath, AnglesAreDirectionalSines)
{
    Eigenray e;
    e.departure_angle = 0.3;
    e.arrival_angle = -0.2;
    e.gain = {0.1, 0.2};
    const PathParam p = to_path(e);
    EXPECT_DOUBLE_EQ(p.aod, std::sin(0.3));
    EXPECT_DOUBLE_EQ(p.aoa, -std::sin(-0.2));
    EXPECT_EQ(p.gain, e.gain);
}
