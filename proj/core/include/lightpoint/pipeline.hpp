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

#ifndef LIGHTPOINT_PIPELINE_HPP
#define LIGHTPOINT_PIPELINE_HPP

#include "lightpoint/beamform.hpp"
#include "lightpoint/capacity.hpp"
#include "lightpoint/channel.hpp"
#include "lightpoint/dofmap.hpp"
#include "lightpoint/env.hpp"
#include "lightpoint/raytrace.hpp"
#include "lightpoint/tracking.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace lightpoint
{
    struct TraceSetup
    {
        std::size_t layers = 400;
        double angle_min_deg = -89.125;
        double angle_max_deg = 89.0;
        double angle_step_deg = 0.25;
        int max_bounces = 1;
        double hit_tolerance = 1.0;
        double max_range = 1e5;
        int bisection_iters = 60;
        double merge_angle = 0.0087;
        bool operator==(const TraceSetup &) const = default;
    };

    struct BeamConstraints
    {
        double g_req = 0.8;
        double eps_cross = 0.01;
        double g_max = 1.0;
        double amp_gain_db = 0.0; // aRIS amplifier gain at |T| = 1
        bool operator==(const BeamConstraints &) const = default;
    };

    struct TrackingSetup
    {
        double i0 = 700.0;
        double sigma = 50.0;
        TrackerConfig config;
        double start_offset_min = 60.0; // random start distance from the beam centre [m]
        double start_offset_max = 70.0;
        bool operator==(const TrackingSetup &o) const
        {
            return i0 == o.i0 && sigma == o.sigma && config.delta == o.config.delta && config.eta == o.config.eta &&
                   config.max_iters == o.config.max_iters && config.tol == o.config.tol &&
                   config.r_max == o.config.r_max && config.window == o.config.window &&
                   start_offset_min == o.start_offset_min && start_offset_max == o.start_offset_max;
        }
    };

    struct CapacitySetup
    {
        double report_snr_db = 20.0;
        std::vector<double> rho_db = {0, 10, 20, 30, 40, 50, 60, 70, 80};
        bool operator==(const CapacitySetup &) const = default;
    };

    struct Scenario
    {
        Environment env;
        Point tx_pos{0.0, 50.0};
        Point rx_pos{500.0, 50.0};
        ArrayGeometry tx_geom{4, 0.731};
        ArrayGeometry rx_geom{4, 0.731};
        ArrayGeometry aris_geom{8, 0.3655}; // per side
        double f_c = 9000.0;
        double c_ref = 1500.0; // sets the carrier wavelength [m/s]
        GridSpec grid{0.0, 5000.0, 1.0, 99.0, 200, 100};
        TraceSetup trace;
        BeamConstraints beam;
        std::optional<TrackingSetup> tracking;
        CapacitySetup capacity;
        bool operator==(const Scenario &) const = default;

        double lambda_c() const { return c_ref / f_c; }
        TraceOptions trace_options() const;
        Deployment deployment() const;
    };

    void validate(const Scenario &s);

    // Start point at a seeded random bearing and offset from the beam centre.
    Point tracking_start(Point center, const TrackingSetup &t, std::uint64_t seed);

    struct JointOptions
    {
        std::uint64_t seed = 1;
        bool zero_phi = false; // replace the synthesized coefficients by zero
    };

    // Map, Light-Point and the paths retained there.
    struct DeployResult
    {
        DoFMapResult map;
        Point p_star;
        std::size_t d_max = 0;
        PointPaths paths_at_star;
        TlMetric selection;
        std::vector<double> capture_aoas; // phi_{1,p}, arrivals at the aRIS
        std::vector<double> target_aods;  // psi_{2,p}, departures toward Rx
    };

    DeployResult deploy(const Scenario &s);

    MultiBeamProblem beam_problem(const Scenario &s, std::vector<double> targets, std::span<const double> capture_aoas);

    struct JointResult : DeployResult
    {
        std::vector<Eigenray> direct;
        MultiBeamProblem beam_problem;
        BeamSolution beams;
        BeamSolution baseline;
        ChannelTriple triple;
        CVector phi;
        CMatrix h_eff;
        std::size_t rank_h = 0;
        std::size_t rank_h_eff = 0;
        std::size_t rank_cascade = 0;
        std::vector<TrackerState> trace;
        double gamma = 1.0;
        std::vector<CapacityRow> capacity;
        CapacityRow report;
        double slope_with = 0.0; // capacity slope 60 -> 80 dB
        double slope_no = 0.0;
    };

    JointResult run_joint(const Scenario &s, const JointOptions &opts = {});
}

#endif
