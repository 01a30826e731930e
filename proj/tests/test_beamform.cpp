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
#include "lightpoint/errors.hpp"
#include "lightpoint/socp.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace lightpoint;

namespace
{
    const cdouble j{0.0, 1.0};

    // Reference optima from an independent interior-point solver (CLARABEL via
    // cvxpy) on the same discretized problems.
    constexpr double kBetaTwoBeams = 0.0793366;
    constexpr double kBetaOneBeam = 0.0852801;

    MultiBeamProblem two_beams()
    {
        MultiBeamProblem p;
        p.aris_side = {8, 0.5};
        p.target_aods = {-0.5, 0.5};
        p.g_req = {0.8};
        p.eps_cross = 0.01;
        p.g_max = 1.0;
        return p;
    }

    double max_on(const std::vector<double> &v) { return *std::max_element(v.begin(), v.end()); }

    void expect_constraints_hold(const MultiBeamProblem &p, const BeamSolution &s)
    {
        const auto grid = sidelobe_grid(p.target_aods, p.aris_side);
        for (const auto &c : check_constraints(p, s, grid, s.beta))
            EXPECT_GE(c.margin, -1e-3) << c.constraint << " bound " << c.bound << " achieved " << c.achieved;
    }
}

TEST(Astar, ForwardExamples)
{
    auto c = astar_forward({2.0 + j, 2.0 + j});
    EXPECT_EQ(c.s, cdouble(0.0));
    EXPECT_NEAR(std::abs(c.t - j * (2.0 + j)), 0.0, 1e-15);
    c = astar_forward({1.0, -1.0});
    EXPECT_NEAR(std::abs(c.s - j), 0.0, 1e-15);
    EXPECT_EQ(c.t, cdouble(0.0));
}

TEST(Astar, InverseExamples)
{
    auto g = astar_inverse({0.0, j});
    EXPECT_NEAR(std::abs(g.g_t - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(g.g_r - 1.0), 0.0, 1e-15);
    g = astar_inverse({j, 0.0});
    EXPECT_NEAR(std::abs(g.g_t - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(g.g_r + 1.0), 0.0, 1e-15);
}

TEST(Astar, IdentitiesOnRandomGains)
{
    std::mt19937_64 rng(4);
    std::normal_distribution<double> n(0.0, 2.0);
    for (int k = 0; k < 500; ++k)
    {
        const AstarGains g{{n(rng), n(rng)}, {n(rng), n(rng)}};
        const AstarCoefficients c = astar_forward(g);
        EXPECT_NEAR(std::norm(c.s) + std::norm(c.t), (std::norm(g.g_t) + std::norm(g.g_r)) / 2.0, 1e-12);
        EXPECT_NEAR(std::abs(c.s + c.t - j * g.g_t), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(c.t - c.s - j * g.g_r), 0.0, 1e-12);

        const AstarCoefficients r{{n(rng), n(rng)}, {n(rng), n(rng)}};
        const AstarCoefficients back = astar_forward(astar_inverse(r));
        EXPECT_NEAR(std::abs(back.s - r.s), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(back.t - r.t), 0.0, 1e-12);
    }
}

TEST(CaptureWeights, Examples)
{
    const ArrayGeometry a{8, 0.3655};
    const std::vector<double> zero{0.0};
    EXPECT_LT((capture_weights(zero, a) - CVector::Ones(8)).norm(), 1e-15);

    const std::vector<double> one{0.37};
    for (const auto &w : capture_weights(one, a))
        EXPECT_NEAR(std::abs(w), 1.0, 1e-15);

    const std::vector<double> pair{-0.37, 0.37};
    const CVector w = capture_weights(pair, a);
    for (Eigen::Index t = 0; t < 8; ++t)
    {
        EXPECT_NEAR(w(t).real(), 2.0 * std::cos(2.0 * M_PI * t * 0.3655 * 0.37), 1e-12);
        EXPECT_NEAR(w(t).imag(), 0.0, 1e-12);
    }
    EXPECT_THROW(capture_weights(std::vector<double>{}, a), InvalidArgument);
}

TEST(BeamPattern, Examples)
{
    const ArrayGeometry a{8, 0.5};
    const std::vector<double> psi{-0.9, -0.3, 0.2, 0.25, 0.7};
    const auto peak = beam_pattern(steering_vector(a, 0.2), a, psi);
    EXPECT_NEAR(peak[2], 1.0, 1e-12);
    EXPECT_EQ(std::max_element(peak.begin(), peak.end()) - peak.begin(), 2);

    for (double m : beam_pattern(CVector::Zero(8), a, psi))
        EXPECT_EQ(m, 0.0);

    std::mt19937_64 rng(8);
    std::normal_distribution<double> n(0.0, 1.0);
    CVector w(8);
    for (auto &x : w)
        x = {n(rng), n(rng)};
    const auto grid = sidelobe_grid(std::vector<double>{}, 0.0);
    for (double m : beam_pattern(w, a, grid))
        EXPECT_LE(m, w.norm() + 1e-12);
}

TEST(SidelobeGrid, ExcludesGuardBand)
{
    const std::vector<double> t{0.5};
    const auto g = sidelobe_grid(t, 0.25);
    EXPECT_EQ(sidelobe_grid(std::vector<double>{}, 0.25).size(), 181u);
    for (double x : g)
        EXPECT_GE(std::abs(x - 0.5), 0.25);
    EXPECT_LT(g.size(), 181u);
}

TEST(Socp, SmallProblemsWithKnownOptima)
{
    // min x + y  s.t.  ||(x, y)|| <= 1  ->  -sqrt(2)
    SocpProblem p;
    p.objective = Eigen::Vector2d(1.0, 1.0);
    SocCone ball{Eigen::Matrix2d::Identity(), Eigen::Vector2d::Zero(), Eigen::Vector2d::Zero(), 1.0, "ball"};
    p.cones.push_back(ball);
    auto r = solve_socp(p);
    ASSERT_TRUE(r.feasible);
    EXPECT_NEAR(r.objective, -std::sqrt(2.0), 1e-6);
    EXPECT_GE(cone_margin(ball, r.x), -1e-9);

    // add x >= 0.9: optimum at (0.9, -sqrt(0.19))
    p.cones.push_back({Eigen::MatrixXd(0, 2), Eigen::VectorXd(0), Eigen::Vector2d(1.0, 0.0), -0.9, "floor"});
    r = solve_socp(p);
    ASSERT_TRUE(r.feasible);
    EXPECT_NEAR(r.x(0), 0.9, 1e-6);
    EXPECT_NEAR(r.x(1), -std::sqrt(0.19), 1e-5);

    // x >= 2 contradicts the ball
    p.cones.back().d = -2.0;
    r = solve_socp(p);
    EXPECT_FALSE(r.feasible);
    EXPECT_GT(r.infeasibility, 0.0);
    EXPECT_NE(std::find(r.violated.begin(), r.violated.end(), "floor"), r.violated.end());
}

TEST(Synthesize, SingleBeamBeatsSteeringBaseline)
{
    MultiBeamProblem p = two_beams();
    p.target_aods = {0.0};
    const BeamSolution s = synthesize_multibeam(p);
    ASSERT_TRUE(s.feasible);
    expect_constraints_hold(p, s);
    const BeamSolution base = steering_baseline(p);
    expect_constraints_hold(p, base);
    EXPECT_LE(s.beta, base.beta + 1e-6);
    EXPECT_NEAR(s.beta, kBetaOneBeam, 0.05 * kBetaOneBeam);
}

TEST(Synthesize, TwoBeamsMeetConstraints)
{
    const MultiBeamProblem p = two_beams();
    const BeamSolution s = synthesize_multibeam(p);
    ASSERT_TRUE(s.feasible);
    ASSERT_EQ(s.t_g_per_beam.size(), 2u);
    expect_constraints_hold(p, s);
    EXPECT_NEAR(s.beta, kBetaTwoBeams, 0.05 * kBetaTwoBeams);
    EXPECT_LE(s.beta, steering_baseline(p).beta);

    // Direct pattern checks on the 1 deg grid.
    const auto grid = sidelobe_grid(p.target_aods, p.aris_side);
    for (std::size_t b = 0; b < 2; ++b)
    {
        const auto main = beam_pattern(s.t_g_per_beam[b], p.aris_side, std::vector<double>{p.target_aods[b]});
        const auto cross = beam_pattern(s.t_g_per_beam[b], p.aris_side, std::vector<double>{p.target_aods[1 - b]});
        EXPECT_GE(main[0], 0.8 - 1e-3);
        EXPECT_LE(cross[0], 0.01 + 1e-3);
        EXPECT_LE(max_on(beam_pattern(s.t_g_per_beam[b], p.aris_side, grid)), s.beta + 1e-3);
    }
    for (const auto &t : s.t_total)
        EXPECT_LE(std::abs(t), 1.0 + 1e-3);
}

TEST(Synthesize, CaptureWeightsFoldIntoMagnitudeCap)
{
    MultiBeamProblem p = two_beams();
    const std::vector<double> aoas{-0.3, 0.4};
    p.capture = capture_weights(aoas, p.aris_side);
    const BeamSolution s = synthesize_multibeam(p);
    CVector sum = CVector::Zero(8);
    for (const auto &b : s.t_g_per_beam)
        sum += b;
    EXPECT_LT((s.t_total - p.capture.cwiseProduct(sum)).norm(), 1e-12);
    for (const auto &t : s.t_total)
        EXPECT_LE(std::abs(t), p.g_max + 1e-3);
}

TEST(Synthesize, InfeasibleNamesFamilies)
{
    MultiBeamProblem p = two_beams();
    p.g_req = {10.0};
    p.g_max = 0.01;
    const BeamSolution s = try_synthesize_multibeam(p);
    EXPECT_FALSE(s.feasible);
    EXPECT_NE(s.certificate.find("main_lobe"), std::string::npos);
    EXPECT_NE(s.certificate.find("magnitude_cap"), std::string::npos);
    try
    {
        synthesize_multibeam(p);
        FAIL() << "expected Infeasible";
    }
    catch (const Infeasible &e)
    {
        EXPECT_NE(std::string(e.what()).find("magnitude_cap"), std::string::npos);
    }
}

TEST(Synthesize, RejectsUnresolvableTargets)
{
    MultiBeamProblem p = two_beams();
    p.target_aods = {0.0, 0.1};
    EXPECT_THROW(validate(p), ValidationError);
    p = two_beams();
    p.g_req = {0.8, 0.8, 0.8};
    EXPECT_THROW(validate(p), ValidationError);
}

TEST(ComposePhi, KroneckerExpansion)
{
    CVector t1(1);
    t1 << cdouble(0.3, -0.2);
    EXPECT_EQ(compose_phi(t1, 1), t1);

    CVector t(2);
    t << 1.0, j;
    CVector expect(4);
    expect << 1.0, 1.0, j, j;
    EXPECT_EQ(compose_phi(t, 2), expect);

    CVector r(8);
    std::mt19937_64 rng(1);
    std::normal_distribution<double> n(0.0, 1.0);
    for (auto &x : r)
        x = {n(rng), n(rng)};
    EXPECT_DOUBLE_EQ(compose_phi(r, 8).cwiseAbs().maxCoeff(), r.cwiseAbs().maxCoeff());
    EXPECT_THROW(compose_phi(r, 4), DimensionMismatch);
}
