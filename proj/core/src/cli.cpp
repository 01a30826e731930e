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

#include "lightpoint/cli.hpp"
#include "lightpoint/config.hpp"
#include "lightpoint/csv.hpp"
#include "lightpoint/errors.hpp"
#include "lightpoint/pipeline.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>

#ifndef LIGHTPOINT_VERSION
#define LIGHTPOINT_VERSION "unknown"
#endif

namespace lightpoint
{
    namespace
    {
        constexpr std::array<std::string_view, 7> kSubcommands = {"trace", "dofmap", "deploy", "beamform",
                                                                  "track", "capacity", "joint"};

        double deg(double rad) { return rad * 180.0 / std::numbers::pi; }

        struct Context
        {
            RunManifest manifest;
            ScenarioFile file;
            std::uint64_t seed = 1;
            std::string config_hash;
            std::ostream *log = nullptr;

            void write(const char *name, const CsvTable &t) const
            {
                const auto path = manifest.out_dir / name;
                write_csv(path, {std::string(version()), config_hash, seed, manifest.subcommand}, t);
                *log << "wrote " << path.string() << "\n";
            }
        };

        CsvTable eigenray_table(const std::vector<Eigenray> &rays)
        {
            CsvTable t{{"departure_deg", "arrival_deg", "range_m", "time_s", "tl_db", "surf_bounces", "bot_bounces"}, {}};
            for (const auto &e : rays)
                t.add({fmt(deg(e.departure_angle)), fmt(deg(e.arrival_angle)), fmt(e.horizontal_range),
                       fmt(e.travel_time), fmt(e.tl_db), std::to_string(e.bounce_signature.surface),
                       std::to_string(e.bounce_signature.bottom)});
            return t;
        }

        CsvTable dofmap_table(const DoFMapResult &m)
        {
            CsvTable t{{"r", "z", "r1", "r2", "sup_dof", "tl_db"}, {}};
            for (const auto &c : m.cells)
                t.add({fmt(c.p.r), fmt(c.p.z), fmt(c.r1), fmt(c.r2), fmt(c.sup_dof),
                       c.tl_metric_db ? fmt(*c.tl_metric_db) : std::string()});
            return t;
        }

        CsvTable lightpoint_table(const DeployResult &d)
        {
            CsvTable t{{"d_max", "r", "z", "tl_db", "n_light_points"}, {}};
            t.add({fmt(d.d_max), fmt(d.p_star.r), fmt(d.p_star.z), fmt(d.selection.tl_db),
                   fmt(d.map.light_points.size())});
            return t;
        }

        CsvTable paths_table(const DeployResult &d)
        {
            CsvTable t{{"hop", "index", "departure_deg", "arrival_deg", "aod", "aoa", "tl_db", "selected"}, {}};
            auto emit = [&](const char *hop, const std::vector<Eigenray> &rays, const std::vector<std::size_t> &sel)
            {
                for (std::size_t i = 0; i < rays.size(); ++i)
                {
                    const PathParam pp = to_path(rays[i]);
                    const bool chosen = std::find(sel.begin(), sel.end(), i) != sel.end();
                    t.add({hop, fmt(i), fmt(deg(rays[i].departure_angle)), fmt(deg(rays[i].arrival_angle)),
                           fmt(pp.aod), fmt(pp.aoa), fmt(rays[i].tl_db), chosen ? "1" : "0"});
                }
            };
            emit("tx_aris", d.paths_at_star.tx_to_p, d.selection.side1);
            emit("aris_rx", d.paths_at_star.p_to_rx, d.selection.side2);
            return t;
        }

        CsvTable beams_table(const MultiBeamProblem &pr, const BeamSolution &sol)
        {
            CsvTable t;
            t.columns.push_back("angle_deg");
            for (std::size_t p = 0; p < sol.t_g_per_beam.size(); ++p)
                t.columns.push_back("beam_" + std::to_string(p));
            std::vector<double> angles;
            for (int a = -90; a <= 90; ++a)
                angles.push_back(std::sin(a * std::numbers::pi / 180.0));
            std::vector<std::vector<double>> pats;
            for (const auto &w : sol.t_g_per_beam)
                pats.push_back(beam_pattern(w, pr.aris_side, angles));
            for (std::size_t i = 0; i < angles.size(); ++i)
            {
                std::vector<std::string> row{fmt(static_cast<double>(static_cast<int>(i) - 90))};
                for (const auto &p : pats)
                    row.push_back(fmt(p[i]));
                t.add(std::move(row));
            }
            return t;
        }

        CsvTable constraints_table(const MultiBeamProblem &pr, const BeamSolution &sol, const BeamSolution &base)
        {
            CsvTable t{{"constraint", "bound", "achieved", "margin"}, {}};
            const std::vector<double> grid =
                pr.sidelobe_grid.empty() ? sidelobe_grid(pr.target_aods, pr.aris_side) : pr.sidelobe_grid;
            for (const auto &c : check_constraints(pr, sol, grid, sol.beta))
                t.add({c.constraint, fmt(c.bound), fmt(c.achieved), fmt(c.margin)});
            t.add({"baseline_sidelobe", fmt(sol.beta), fmt(base.beta), fmt(base.beta - sol.beta)});
            return t;
        }

        CsvTable track_table(const std::vector<TrackerState> &trace, double a_max)
        {
            CsvTable t{{"iter", "r", "z", "energy", "gamma", "g_r", "g_z"}, {}};
            for (const auto &st : trace)
                t.add({fmt(st.iter), fmt(st.x.r), fmt(st.x.z), fmt(st.a_received), fmt(gamma_track(st.a_received, a_max)),
                       fmt(st.g_hat[0]), fmt(st.g_hat[1])});
            return t;
        }

        CsvTable capacity_table(const std::vector<CapacityRow> &rows)
        {
            CsvTable t{{"rho_db", "c_no_aris", "c_with_aris", "gain_ratio"}, {}};
            for (const auto &r : rows)
                t.add({fmt(r.rho_db), fmt(r.c_no_aris), fmt(r.c_with_aris), fmt(r.gain_ratio())});
            return t;
        }

        void run_trace(const Context &ctx)
        {
            const Scenario &s = ctx.file.scenario;
            const Deployment dep = s.deployment();
            const auto rays = find_eigenrays(dep.medium, dep.env, s.tx_pos, s.rx_pos, dep.trace);
            ctx.write("eigenrays.csv", eigenray_table(rays));
            CsvTable poly{{"ray", "departure_deg", "r", "z"}, {}};
            TraceOptions o = dep.trace;
            o.max_range = std::abs(s.rx_pos.r - s.tx_pos.r);
            for (std::size_t i = 0; i < rays.size(); ++i)
            {
                const Ray ray = trace_ray(dep.medium, dep.env, s.tx_pos, rays[i].departure_angle, o);
                for (const auto &pt : ray.polyline)
                    poly.add({fmt(i), fmt(deg(rays[i].departure_angle)), fmt(pt.r), fmt(pt.z)});
            }
            ctx.write("rays.csv", poly);
        }

        void run_dofmap(const Context &ctx)
        {
            const Scenario &s = ctx.file.scenario;
            const DoFMapResult m = build_dof_map(s.deployment(), s.grid);
            ctx.write("dofmap.csv", dofmap_table(m));
            CsvTable t{{"d_max", "r", "z", "n_light_points"}, {}};
            t.add({fmt(m.d_max), fmt(m.optimum->r), fmt(m.optimum->z), fmt(m.light_points.size())});
            ctx.write("lightpoint.csv", t);
        }

        void run_deploy(const Context &ctx)
        {
            const DeployResult d = deploy(ctx.file.scenario);
            ctx.write("dofmap.csv", dofmap_table(d.map));
            ctx.write("lightpoint.csv", lightpoint_table(d));
            ctx.write("paths.csv", paths_table(d));
        }

        void run_beamform(const Context &ctx)
        {
            const Scenario &s = ctx.file.scenario;
            std::vector<double> targets = ctx.file.beam_targets;
            std::vector<double> capture = ctx.file.beam_capture_aoas;
            if (targets.empty())
            {
                const DeployResult d = deploy(s);
                targets = d.target_aods;
                capture = d.capture_aoas;
            }
            const MultiBeamProblem pr = beam_problem(s, targets, capture);
            const BeamSolution sol = synthesize_multibeam(pr);
            ctx.write("beams.csv", beams_table(pr, sol));
            ctx.write("constraints.csv", constraints_table(pr, sol, steering_baseline(pr)));
        }

        void run_track(const Context &ctx)
        {
            const Scenario &s = ctx.file.scenario;
            const TrackingSetup t = s.tracking.value_or(TrackingSetup{});
            const Point center = ctx.file.tracking_center ? *ctx.file.tracking_center : deploy(s).p_star;
            const GaussianBeamField field{t.i0, t.sigma, center};
            const auto trace =
                run_tracking(field, t.config, tracking_start(center, t, ctx.seed), s.aris_geom, s.lambda_c());
            ctx.write("track.csv", track_table(trace, max_energy(field, s.aris_geom, s.lambda_c())));
        }

        void run_capacity(const Context &ctx)
        {
            const JointResult j = run_joint(ctx.file.scenario, {ctx.seed, false});
            ctx.write("capacity.csv", capacity_table(j.capacity));
        }

        void run_joint_cmd(const Context &ctx)
        {
            const Scenario &s = ctx.file.scenario;
            const JointResult j = run_joint(s, {ctx.seed, false});
            ctx.write("dofmap.csv", dofmap_table(j.map));
            ctx.write("lightpoint.csv", lightpoint_table(j));
            ctx.write("paths.csv", paths_table(j));
            ctx.write("beams.csv", beams_table(j.beam_problem, j.beams));
            ctx.write("constraints.csv", constraints_table(j.beam_problem, j.beams, j.baseline));
            if (s.tracking)
            {
                const GaussianBeamField field{s.tracking->i0, s.tracking->sigma, j.p_star};
                ctx.write("track.csv", track_table(j.trace, max_energy(field, s.aris_geom, s.lambda_c())));
            }
            ctx.write("capacity.csv", capacity_table(j.capacity));
            CsvTable sum{{"key", "value"}, {}};
            sum.add({"d_max", fmt(j.d_max)});
            sum.add({"p_star_r", fmt(j.p_star.r)});
            sum.add({"p_star_z", fmt(j.p_star.z)});
            sum.add({"beta", fmt(j.beams.beta)});
            sum.add({"rank_h", fmt(j.rank_h)});
            sum.add({"rank_h_eff", fmt(j.rank_h_eff)});
            sum.add({"rank_aris", fmt(j.rank_cascade)});
            sum.add({"gamma_track", fmt(j.gamma)});
            sum.add({"report_snr_db", fmt(j.report.rho_db)});
            sum.add({"gain_ratio", fmt(j.report.gain_ratio())});
            sum.add({"slope_no_aris", fmt(j.slope_no)});
            sum.add({"slope_with_aris", fmt(j.slope_with)});
            ctx.write("summary.csv", sum);
        }
    }

    std::string_view version()
    {
        return LIGHTPOINT_VERSION;
    }

    std::span<const std::string_view> subcommands()
    {
        return kSubcommands;
    }

    std::string usage()
    {
        std::string u = "usage: lightpoint <subcommand> --config <path> [--out <dir>] [--seed <u64>]\nsubcommands:";
        for (auto s : kSubcommands)
            u += " " + std::string(s);
        return u + "\n";
    }

    int dispatch(const RunManifest &manifest, std::ostream &log, std::ostream &err)
    {
        static const std::array<std::function<void(const Context &)>, 7> handlers = {
            run_trace, run_dofmap, run_deploy, run_beamform, run_track, run_capacity, run_joint_cmd};
        const auto it = std::find(kSubcommands.begin(), kSubcommands.end(), manifest.subcommand);
        if (it == kSubcommands.end())
        {
            err << "unknown subcommand '" << manifest.subcommand << "'\n" << usage();
            return 2;
        }
        try
        {
            Context ctx;
            ctx.manifest = manifest;
            ctx.log = &log;
            std::ifstream in(manifest.config_path, std::ios::binary);
            if (!in)
                throw ParseError("cannot open config file '" + manifest.config_path.string() + "'");
            std::ostringstream buf;
            buf << in.rdbuf();
            ctx.config_hash = fnv1a_hex(buf.str());
            ctx.file = parse_config_text(buf.str(), manifest.config_path.string());
            ctx.seed = manifest.seed.value_or(ctx.file.seed.value_or(1));
            std::filesystem::create_directories(manifest.out_dir);
            handlers[static_cast<std::size_t>(it - kSubcommands.begin())](ctx);
            return 0;
        }
        catch (const Error &e)
        {
            err << "error: " << e.what() << "\n";
            return 1;
        }
        catch (const std::filesystem::filesystem_error &e)
        {
            err << "error: " << e.what() << "\n";
            return 1;
        }
    }
}
