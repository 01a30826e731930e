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

#include "lightpoint/pipeline.hpp"
#include "lightpoint/errors.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace lightpoint
{
    namespace
    {
        template <class E>
        [[noreturn]] void restage(const char *stage, const E &e)
        {
            throw E(std::string(stage) + " stage: " + e.what());
        }

        // Runs fn, prefixing the stage name to the errors the pipeline propagates.
        template <class F>
        auto in_stage(const char *stage, F &&fn)
        {
            try
            {
                return fn();
            }
            catch (const EmptyMap &e)
            {
                restage(stage, e);
            }
            catch (const Infeasible &e)
            {
                restage(stage, e);
            }
            catch (const InsufficientPaths &e)
            {
                restage(stage, e);
            }
            catch (const NoEigenray &e)
            {
                restage(stage, e);
            }
        }
    }

    TraceOptions Scenario::trace_options() const
    {
        TraceOptions o;
        o.angle_grid = TraceOptions::uniform_grid_deg(trace.angle_min_deg, trace.angle_max_deg, trace.angle_step_deg);
        o.max_bounces = trace.max_bounces;
        o.hit_tolerance = trace.hit_tolerance;
        o.max_range = trace.max_range;
        o.bisection_iters = trace.bisection_iters;
        o.carrier_hz = f_c;
        o.merge_angle = trace.merge_angle;
        return o;
    }

    Deployment Scenario::deployment() const
    {
        return {env,     discretize(env.profile, env.depth_H, trace.layers),
                tx_pos,  rx_pos,
                tx_geom, rx_geom,
                aris_geom, trace_options()};
    }

    void validate(const Scenario &s)
    {
        validate(s.env);
        validate(s.tx_geom);
        validate(s.rx_geom);
        validate(s.aris_geom);
        validate(s.grid);
        auto inside = [&](Point p) { return p.z >= 0.0 && p.z <= s.env.depth_H; };
        if (!inside(s.tx_pos) || !inside(s.rx_pos))
            throw ValidationError("positions must lie inside the water column");
        if (s.tx_pos == s.rx_pos)
            throw ValidationError("Tx and Rx must differ");
        if (!(s.f_c > 0.0) || !(s.c_ref > 0.0))
            throw ValidationError("f_c and c_ref must be positive");
        if (s.trace.layers == 0)
            throw ValidationError("trace.layers must be at least 1");
        if (!(s.trace.angle_step_deg > 0.0) || !(s.trace.angle_min_deg <= s.trace.angle_max_deg))
            throw ValidationError("trace angle grid is empty");
        if (s.grid.z_min < 0.0 || s.grid.z_max > s.env.depth_H)
            throw ValidationError("grid depth range must lie within the water column");
        if (!(s.beam.g_req > 0.0) || !(s.beam.eps_cross > 0.0) || !(s.beam.g_max > 0.0))
            throw ValidationError("beam constraints must be positive");
        if (s.tracking)
        {
            GaussianBeamField f{s.tracking->i0, s.tracking->sigma, {}};
            validate(s.tracking->config, f, s.aris_geom, s.lambda_c());
            if (!(s.tracking->start_offset_min >= 0.0) ||
                !(s.tracking->start_offset_min <= s.tracking->start_offset_max) ||
                s.tracking->start_offset_max > s.tracking->config.r_max)
                throw ValidationError("tracking start offsets must satisfy 0 <= min <= max <= r_max");
        }
        if (s.capacity.rho_db.empty())
            throw ValidationError("capacity.rho_db must not be empty");
        validate(s.trace_options());
    }

    DeployResult deploy(const Scenario &s)
    {
        validate(s);
        const Deployment dep = s.deployment();
        DeployResult out;
        out.map = in_stage("dofmap", [&] { return build_dof_map(dep, s.grid); });
        out.p_star = *out.map.optimum;
        out.d_max = out.map.d_max;

        const DoFEvaluator ev(dep, std::abs(out.p_star.r - s.tx_pos.r), std::abs(out.p_star.r - s.rx_pos.r));
        out.paths_at_star = ev.paths(out.p_star);
        const HopPaths h1 = make_hop(out.paths_at_star.tx_to_p, s.tx_geom.aperture(), s.aris_geom.aperture());
        const HopPaths h2 = make_hop(out.paths_at_star.p_to_rx, s.aris_geom.aperture(), s.rx_geom.aperture());
        out.selection = in_stage("selection", [&] { return tl_metric(h1, h2, out.d_max); });
        for (std::size_t i : out.selection.side1)
            out.capture_aoas.push_back(h1.aoa[i]);
        for (std::size_t i : out.selection.side2)
            out.target_aods.push_back(h2.aod[i]);
        return out;
    }

    MultiBeamProblem beam_problem(const Scenario &s, std::vector<double> targets, std::span<const double> capture_aoas)
    {
        MultiBeamProblem pr;
        pr.aris_side = s.aris_geom;
        pr.target_aods = std::move(targets);
        pr.g_req = {s.beam.g_req};
        pr.eps_cross = s.beam.eps_cross;
        pr.g_max = s.beam.g_max;
        if (!capture_aoas.empty())
            pr.capture = capture_weights(capture_aoas, s.aris_geom);
        return pr;
    }

    Point tracking_start(Point center, const TrackingSetup &t, std::uint64_t seed)
    {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
        std::uniform_real_distribution<double> rad(t.start_offset_min, t.start_offset_max);
        const double a = ang(rng);
        const double r = rad(rng);
        return {center.r + r * std::cos(a), center.z + r * std::sin(a)};
    }

    JointResult run_joint(const Scenario &s, const JointOptions &opts)
    {
        JointResult out;
        static_cast<DeployResult &>(out) = deploy(s);
        const Deployment dep = s.deployment();
        const auto &p1 = out.paths_at_star.tx_to_p;
        const auto &p2 = out.paths_at_star.p_to_rx;

        out.beam_problem = beam_problem(s, out.target_aods, out.capture_aoas);
        out.beams = in_stage("beamform", [&] { return synthesize_multibeam(out.beam_problem); });
        out.baseline = steering_baseline(out.beam_problem);

        out.direct = in_stage("direct link", [&]
                              { return find_eigenrays(dep.medium, dep.env, s.tx_pos, s.rx_pos, dep.trace); });
        out.triple.paths_direct = to_paths(out.direct);
        out.triple.paths_tx_aris = to_paths(p1);
        out.triple.paths_aris_rx = to_paths(p2);
        out.triple.H = assemble_direct(out.triple.paths_direct, s.tx_geom, s.rx_geom);
        out.triple.H1 = assemble_tx_aris(out.triple.paths_tx_aris, s.tx_geom, s.aris_geom);
        out.triple.H2 = assemble_aris_rx(out.triple.paths_aris_rx, s.aris_geom, s.rx_geom);

        const double amp = std::pow(10.0, s.beam.amp_gain_db / 20.0);
        out.phi = compose_phi(out.beams.t_total, s.aris_geom.n_elements) * amp;
        if (opts.zero_phi)
            out.phi.setZero();

        // Gains are referenced to the strongest direct path so rho is the SNR of that path.
        double ref = 0.0;
        for (const auto &pp : out.triple.paths_direct)
            ref = std::max(ref, std::abs(pp.gain));
        const CMatrix h = out.triple.H / ref;
        out.h_eff = effective_channel(out.triple, out.phi) / ref;
        out.rank_h = numerical_rank(h);
        out.rank_h_eff = numerical_rank(out.h_eff);
        out.rank_cascade = numerical_rank(out.h_eff - h);

        if (s.tracking)
        {
            const auto &t = *s.tracking;
            const GaussianBeamField field{t.i0, t.sigma, out.p_star};
            const Point start = tracking_start(out.p_star, t, opts.seed);
            out.trace = run_tracking(field, t.config, start, s.aris_geom, s.lambda_c());
            out.gamma = gamma_track(out.trace.back().a_received, max_energy(field, s.aris_geom, s.lambda_c()));
        }

        out.capacity = capacity_sweep(h, out.h_eff, out.gamma, s.capacity.rho_db);
        const double rep[] = {s.capacity.report_snr_db};
        out.report = capacity_sweep(h, out.h_eff, out.gamma, rep).front();
        out.slope_with = high_snr_slope(out.h_eff, out.gamma, 60.0, 80.0);
        out.slope_no = high_snr_slope(h, 1.0, 60.0, 80.0);
        return out;
    }
}
