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

#include "lightpoint/config.hpp"
#include "lightpoint/errors.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace lightpoint
{
    namespace
    {
        std::string where(const YAML::Node &n, const std::string &origin)
        {
            const YAML::Mark m = n.Mark();
            if (m.is_null())
                return origin;
            return origin + ":" + std::to_string(m.line + 1);
        }

        // Typed access to one mapping that rejects keys it does not know.
        class Section
        {
        public:
            Section(YAML::Node node, std::string path, const std::string &origin,
                    std::initializer_list<const char *> keys)
                : node_(std::move(node)), path_(std::move(path)), origin_(origin)
            {
                if (!node_ || node_.IsNull())
                    return;
                if (!node_.IsMap())
                    throw ParseError(where(node_, origin_) + ": '" + path_ + "' must be a mapping");
                for (const auto &kv : node_)
                {
                    const auto key = kv.first.as<std::string>();
                    if (std::none_of(keys.begin(), keys.end(), [&](const char *k) { return key == k; }))
                        throw ParseError(where(kv.first, origin_) + ": unknown key '" + path_ + "." + key + "'");
                }
            }

            bool has(const char *key) const { return node_ && node_.IsMap() && node_[key]; }
            YAML::Node raw(const char *key) const { return has(key) ? node_[key] : YAML::Node(); }
            std::string key_path(const char *key) const { return path_ + "." + key; }

            template <class T>
            T get(const char *key, T fallback) const
            {
                if (!has(key))
                    return fallback;
                const YAML::Node v = node_[key];
                try
                {
                    return v.as<T>();
                }
                catch (const YAML::Exception &)
                {
                    throw ParseError(where(v, origin_) + ": bad value for '" + key_path(key) + "'");
                }
            }

            Point point(const char *key, Point fallback) const
            {
                const auto v = get<std::vector<double>>(key, {fallback.r, fallback.z});
                if (v.size() != 2)
                    throw ParseError(where(raw(key), origin_) + ": '" + key_path(key) + "' must be [r, z]");
                return {v[0], v[1]};
            }

        private:
            YAML::Node node_;
            std::string path_;
            std::string origin_;
        };

        SoundSpeedProfile read_profile(const YAML::Node &n, const std::string &origin)
        {
            if (!n)
                return LinearGradient{};
            const Section head(n, "env.profile", origin, {"type", "c_s", "a", "epsilon", "z0", "zl", "samples"});
            const auto type = head.get<std::string>("type", "linear");
            if (type == "linear")
            {
                const Section s(n, "env.profile", origin, {"type", "c_s", "a"});
                return LinearGradient{s.get("c_s", 1500.0), s.get("a", 0.0)};
            }
            if (type == "munk")
            {
                const Section s(n, "env.profile", origin, {"type", "c_s", "epsilon", "z0", "zl"});
                const Munk d;
                return Munk{s.get("c_s", d.c_s), s.get("epsilon", d.epsilon), s.get("z0", d.z0), s.get("zl", d.zl)};
            }
            if (type == "tabulated")
            {
                const Section s(n, "env.profile", origin, {"type", "samples"});
                Tabulated t;
                for (const auto &row : s.get<std::vector<std::vector<double>>>("samples", {}))
                {
                    if (row.size() != 2)
                        throw ParseError(where(s.raw("samples"), origin) + ": samples must be [depth, speed] pairs");
                    t.samples.push_back({row[0], row[1]});
                }
                return t;
            }
            throw ParseError(where(n, origin) + ": unknown profile type '" + type + "'");
        }

        ArrayGeometry read_array(const Section &arrays, const char *key, ArrayGeometry fallback,
                                 const std::string &origin)
        {
            const Section s(arrays.raw(key), arrays.key_path(key), origin, {"n", "spacing"});
            return {s.get<std::size_t>("n", fallback.n_elements), s.get("spacing", fallback.spacing)};
        }
    }

    ScenarioFile parse_config_text(const std::string &text, const std::string &origin)
    {
        YAML::Node root;
        try
        {
            root = YAML::Load(text);
        }
        catch (const YAML::ParserException &e)
        {
            throw ParseError(origin + ":" + std::to_string(e.mark.line + 1) + ": " + e.msg);
        }
        if (root.IsNull())
            root = YAML::Node(YAML::NodeType::Map);

        const Section top(root, "", origin, {"env", "trace", "arrays", "grid", "beam", "tracking", "capacity"});
        ScenarioFile out;
        Scenario &s = out.scenario;

        const Section env(top.raw("env"), "env", origin,
                          {"depth_H", "surface_loss_db", "bottom_loss_db", "absorption_db_per_km", "profile", "tx_pos",
                           "rx_pos", "f_c", "c_ref"});
        s.env.depth_H = env.get("depth_H", s.env.depth_H);
        s.env.surface_loss_db = env.get("surface_loss_db", 0.0);
        s.env.bottom_loss_db = env.get("bottom_loss_db", 0.0);
        s.env.absorption_db_per_km = env.get("absorption_db_per_km", 0.0);
        s.env.profile = read_profile(env.raw("profile"), origin);
        s.tx_pos = env.point("tx_pos", s.tx_pos);
        s.rx_pos = env.point("rx_pos", s.rx_pos);
        s.f_c = env.get("f_c", s.f_c);
        s.c_ref = env.get("c_ref", s.c_ref);

        const Section tr(top.raw("trace"), "trace", origin,
                         {"layers", "angle_min_deg", "angle_max_deg", "angle_step_deg", "max_bounces",
                          "hit_tolerance", "max_range", "bisection_iters", "merge_angle"});
        s.trace.layers = tr.get("layers", s.trace.layers);
        s.trace.angle_min_deg = tr.get("angle_min_deg", s.trace.angle_min_deg);
        s.trace.angle_max_deg = tr.get("angle_max_deg", s.trace.angle_max_deg);
        s.trace.angle_step_deg = tr.get("angle_step_deg", s.trace.angle_step_deg);
        s.trace.max_bounces = tr.get("max_bounces", s.trace.max_bounces);
        s.trace.hit_tolerance = tr.get("hit_tolerance", s.trace.hit_tolerance);
        s.trace.max_range = tr.get("max_range", s.trace.max_range);
        s.trace.bisection_iters = tr.get("bisection_iters", s.trace.bisection_iters);
        s.trace.merge_angle = tr.get("merge_angle", s.trace.merge_angle);

        const Section arrays(top.raw("arrays"), "arrays", origin, {"tx", "rx", "aris"});
        s.tx_geom = read_array(arrays, "tx", s.tx_geom, origin);
        s.rx_geom = read_array(arrays, "rx", s.rx_geom, origin);
        s.aris_geom = read_array(arrays, "aris", s.aris_geom, origin);

        // Without a grid section the map spans the link over the full depth.
        GridSpec g{std::min(s.tx_pos.r, s.rx_pos.r), std::max(s.tx_pos.r, s.rx_pos.r), 0.0, s.env.depth_H, 200, 100};
        const Section grid(top.raw("grid"), "grid", origin, {"r_min", "r_max", "z_min", "z_max", "n_r", "n_z"});
        s.grid = {grid.get("r_min", g.r_min), grid.get("r_max", g.r_max), grid.get("z_min", g.z_min),
                  grid.get("z_max", g.z_max), grid.get("n_r", g.n_r),     grid.get("n_z", g.n_z)};

        const Section beam(top.raw("beam"), "beam", origin,
                           {"g_req", "eps_cross", "g_max", "amp_gain_db", "targets", "capture_aoas"});
        s.beam.g_req = beam.get("g_req", s.beam.g_req);
        s.beam.eps_cross = beam.get("eps_cross", s.beam.eps_cross);
        s.beam.g_max = beam.get("g_max", s.beam.g_max);
        s.beam.amp_gain_db = beam.get("amp_gain_db", s.beam.amp_gain_db);
        out.beam_targets = beam.get<std::vector<double>>("targets", {});
        out.beam_capture_aoas = beam.get<std::vector<double>>("capture_aoas", {});

        if (top.has("tracking"))
        {
            const Section t(top.raw("tracking"), "tracking", origin,
                            {"i0", "sigma", "delta", "eta", "max_iters", "tol", "r_max", "window", "start_offset_min",
                             "start_offset_max", "seed", "center"});
            TrackingSetup ts;
            ts.i0 = t.get("i0", ts.i0);
            ts.sigma = t.get("sigma", ts.sigma);
            ts.config.delta = t.get("delta", ts.config.delta);
            ts.config.eta = t.get("eta", ts.config.eta);
            ts.config.max_iters = t.get("max_iters", ts.config.max_iters);
            ts.config.tol = t.get("tol", ts.config.tol);
            ts.config.r_max = t.get("r_max", ts.config.r_max);
            ts.config.window = t.get("window", ts.config.window);
            ts.start_offset_min = t.get("start_offset_min", ts.start_offset_min);
            ts.start_offset_max = t.get("start_offset_max", ts.start_offset_max);
            if (t.has("seed"))
                out.seed = t.get<std::uint64_t>("seed", 0);
            if (t.has("center"))
                out.tracking_center = t.point("center", {});
            s.tracking = ts;
        }

        const Section cap(top.raw("capacity"), "capacity", origin, {"report_snr_db", "rho_db"});
        s.capacity.report_snr_db = cap.get("report_snr_db", s.capacity.report_snr_db);
        s.capacity.rho_db = cap.get("rho_db", s.capacity.rho_db);

        validate(s);
        if (!out.beam_capture_aoas.empty() && out.beam_targets.empty())
            throw ValidationError("beam.capture_aoas needs beam.targets");
        return out;
    }

    ScenarioFile parse_config(const std::filesystem::path &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ParseError("cannot open config file '" + path.string() + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_config_text(buf.str(), path.string());
    }

    std::string serialize(const ScenarioFile &file)
    {
        const Scenario &s = file.scenario;
        YAML::Emitter e;
        e.SetDoublePrecision(17);
        auto pair = [&](Point p) { e << YAML::Flow << YAML::BeginSeq << p.r << p.z << YAML::EndSeq; };
        auto array = [&](const char *k, const ArrayGeometry &g)
        {
            e << YAML::Key << k << YAML::Value << YAML::Flow << YAML::BeginMap << YAML::Key << "n" << YAML::Value
              << g.n_elements << YAML::Key << "spacing" << YAML::Value << g.spacing << YAML::EndMap;
        };
        auto list = [&](const std::vector<double> &v)
        {
            e << YAML::Flow << YAML::BeginSeq;
            for (double x : v)
                e << x;
            e << YAML::EndSeq;
        };

        e << YAML::BeginMap;
        e << YAML::Key << "env" << YAML::Value << YAML::BeginMap;
        e << YAML::Key << "depth_H" << YAML::Value << s.env.depth_H;
        e << YAML::Key << "surface_loss_db" << YAML::Value << s.env.surface_loss_db;
        e << YAML::Key << "bottom_loss_db" << YAML::Value << s.env.bottom_loss_db;
        e << YAML::Key << "absorption_db_per_km" << YAML::Value << s.env.absorption_db_per_km;
        e << YAML::Key << "profile" << YAML::Value << YAML::BeginMap;
        if (const auto *m = std::get_if<Munk>(&s.env.profile))
            e << YAML::Key << "type" << YAML::Value << "munk" << YAML::Key << "c_s" << YAML::Value << m->c_s
              << YAML::Key << "epsilon" << YAML::Value << m->epsilon << YAML::Key << "z0" << YAML::Value << m->z0
              << YAML::Key << "zl" << YAML::Value << m->zl;
        else if (const auto *l = std::get_if<LinearGradient>(&s.env.profile))
            e << YAML::Key << "type" << YAML::Value << "linear" << YAML::Key << "c_s" << YAML::Value << l->c_s
              << YAML::Key << "a" << YAML::Value << l->a;
        else
        {
            e << YAML::Key << "type" << YAML::Value << "tabulated" << YAML::Key << "samples" << YAML::Value
              << YAML::BeginSeq;
            for (const auto &smp : std::get<Tabulated>(s.env.profile).samples)
                e << YAML::Flow << YAML::BeginSeq << smp.depth << smp.speed << YAML::EndSeq;
            e << YAML::EndSeq;
        }
        e << YAML::EndMap;
        e << YAML::Key << "tx_pos" << YAML::Value;
        pair(s.tx_pos);
        e << YAML::Key << "rx_pos" << YAML::Value;
        pair(s.rx_pos);
        e << YAML::Key << "f_c" << YAML::Value << s.f_c;
        e << YAML::Key << "c_ref" << YAML::Value << s.c_ref;
        e << YAML::EndMap;

        const TraceSetup &t = s.trace;
        e << YAML::Key << "trace" << YAML::Value << YAML::BeginMap;
        e << YAML::Key << "layers" << YAML::Value << t.layers;
        e << YAML::Key << "angle_min_deg" << YAML::Value << t.angle_min_deg;
        e << YAML::Key << "angle_max_deg" << YAML::Value << t.angle_max_deg;
        e << YAML::Key << "angle_step_deg" << YAML::Value << t.angle_step_deg;
        e << YAML::Key << "max_bounces" << YAML::Value << t.max_bounces;
        e << YAML::Key << "hit_tolerance" << YAML::Value << t.hit_tolerance;
        e << YAML::Key << "max_range" << YAML::Value << t.max_range;
        e << YAML::Key << "bisection_iters" << YAML::Value << t.bisection_iters;
        e << YAML::Key << "merge_angle" << YAML::Value << t.merge_angle;
        e << YAML::EndMap;

        e << YAML::Key << "arrays" << YAML::Value << YAML::BeginMap;
        array("tx", s.tx_geom);
        array("rx", s.rx_geom);
        array("aris", s.aris_geom);
        e << YAML::EndMap;

        e << YAML::Key << "grid" << YAML::Value << YAML::BeginMap;
        e << YAML::Key << "r_min" << YAML::Value << s.grid.r_min << YAML::Key << "r_max" << YAML::Value << s.grid.r_max;
        e << YAML::Key << "z_min" << YAML::Value << s.grid.z_min << YAML::Key << "z_max" << YAML::Value << s.grid.z_max;
        e << YAML::Key << "n_r" << YAML::Value << s.grid.n_r << YAML::Key << "n_z" << YAML::Value << s.grid.n_z;
        e << YAML::EndMap;

        e << YAML::Key << "beam" << YAML::Value << YAML::BeginMap;
        e << YAML::Key << "g_req" << YAML::Value << s.beam.g_req;
        e << YAML::Key << "eps_cross" << YAML::Value << s.beam.eps_cross;
        e << YAML::Key << "g_max" << YAML::Value << s.beam.g_max;
        e << YAML::Key << "amp_gain_db" << YAML::Value << s.beam.amp_gain_db;
        if (!file.beam_targets.empty())
        {
            e << YAML::Key << "targets" << YAML::Value;
            list(file.beam_targets);
        }
        if (!file.beam_capture_aoas.empty())
        {
            e << YAML::Key << "capture_aoas" << YAML::Value;
            list(file.beam_capture_aoas);
        }
        e << YAML::EndMap;

        if (s.tracking)
        {
            const TrackingSetup &ts = *s.tracking;
            e << YAML::Key << "tracking" << YAML::Value << YAML::BeginMap;
            e << YAML::Key << "i0" << YAML::Value << ts.i0;
            e << YAML::Key << "sigma" << YAML::Value << ts.sigma;
            e << YAML::Key << "delta" << YAML::Value << ts.config.delta;
            e << YAML::Key << "eta" << YAML::Value << ts.config.eta;
            e << YAML::Key << "max_iters" << YAML::Value << ts.config.max_iters;
            e << YAML::Key << "tol" << YAML::Value << ts.config.tol;
            e << YAML::Key << "r_max" << YAML::Value << ts.config.r_max;
            e << YAML::Key << "window" << YAML::Value << ts.config.window;
            e << YAML::Key << "start_offset_min" << YAML::Value << ts.start_offset_min;
            e << YAML::Key << "start_offset_max" << YAML::Value << ts.start_offset_max;
            if (file.seed)
                e << YAML::Key << "seed" << YAML::Value << *file.seed;
            if (file.tracking_center)
            {
                e << YAML::Key << "center" << YAML::Value;
                pair(*file.tracking_center);
            }
            e << YAML::EndMap;
        }

        e << YAML::Key << "capacity" << YAML::Value << YAML::BeginMap;
        e << YAML::Key << "report_snr_db" << YAML::Value << s.capacity.report_snr_db;
        e << YAML::Key << "rho_db" << YAML::Value;
        list(s.capacity.rho_db);
        e << YAML::EndMap;
        e << YAML::EndMap;
        return std::string(e.c_str()) + "\n";
    }
}
