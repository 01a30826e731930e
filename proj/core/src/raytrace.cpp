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

#include "lightpoint/raytrace.hpp"
#include "lightpoint/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

namespace lightpoint
{
    namespace
    {
        constexpr std::size_t max_steps = 5'000'000;

        struct BounceCount
        {
            int surf = 0;
            int bot = 0;
        };

        // Layer-by-layer tracer. When counts is non-null it receives the
        // cumulative bounce counts valid after each polyline point.
        Ray trace_impl(const LayeredMedium &medium, Point src, double alpha0, int max_bounces, double max_range,
                       std::vector<BounceCount> *counts)
        {
            const double H = medium.total_depth();
            if (!(src.z >= 0.0 && src.z <= H))
                throw InvalidArgument("source depth outside the water column");
            if (!(std::abs(alpha0) < std::numbers::pi / 2))
                throw InvalidArgument("departure angle must lie in (-pi/2, pi/2)");
            if (alpha0 == 0.0 && medium.is_constant())
                throw DegenerateAngle("horizontal ray in a constant medium never meets a boundary");

            Ray ray;
            ray.departure_angle = alpha0;
            ray.polyline.push_back(src);
            if (counts)
                counts->push_back({});

            double r = src.r;
            double z = src.z;
            const double r_end = src.r + max_range;
            int dir = alpha0 >= 0.0 ? 1 : -1;
            double alpha = std::abs(alpha0);

            // A source on an interface belongs to the layer it is heading into.
            std::size_t m = medium.layer_at(z);
            if (dir < 0 && m > 0 && z <= medium.top(m))
                --m;
            if (dir > 0 && z >= medium.bottom(m) && m + 1 < medium.size())
                ++m;

            auto push = [&](double c)
            {
                ray.polyline.push_back({r, z});
                ray.segments.push_back({alpha, c});
                if (counts)
                    counts->push_back({ray.surface_bounces, ray.bottom_bounces});
            };

            for (std::size_t step = 0; step < max_steps; ++step)
            {
                const double c_m = medium.speed(m);
                const bool last = dir > 0 ? m + 1 == medium.size() : m == 0;
                const double z_face = dir > 0 ? medium.bottom(m) : medium.top(m);

                enum class Event
                {
                    interface,
                    boundary,
                    turn
                } event = Event::boundary;
                double z_target = z_face;
                double alpha_next = alpha;

                if (!last)
                {
                    const std::size_t n = dir > 0 ? m + 1 : m - 1;
                    const double c_n = medium.speed(n);
                    const SnellOutcome out = step_snell(alpha, c_m, c_n);
                    if (!out.turned)
                    {
                        event = Event::interface;
                        alpha_next = out.alpha;
                    }
                    else
                    {
                        // Turning depth: where the speed interpolated between the
                        // two layer midpoints reaches c_m / cos(alpha).
                        event = Event::turn;
                        const double c_turn = c_m / std::cos(alpha);
                        const double f = (c_turn - c_m) / (c_n - c_m);
                        const double mid_m = 0.5 * (medium.top(m) + medium.bottom(m));
                        const double mid_n = 0.5 * (medium.top(n) + medium.bottom(n));
                        const double zt = mid_m + f * (mid_n - mid_m);
                        z_target = dir > 0 ? std::clamp(zt, z, z_face) : std::clamp(zt, z_face, z);
                    }
                }

                const double dv = std::abs(z_target - z);
                if (dv > 0.0)
                {
                    const double t = std::tan(alpha);
                    const double run = t > 0.0 ? dv / t : std::numeric_limits<double>::infinity();
                    if (r + run >= r_end)
                    {
                        const double run_c = r_end - r;
                        const double dv_c = run_c * t;
                        const double len = std::hypot(run_c, dv_c);
                        r = r_end;
                        z = std::clamp(z + dir * dv_c, 0.0, H);
                        ray.arc_length += len;
                        ray.travel_time += len / c_m;
                        push(c_m);
                        ray.reached_range = true;
                        ray.final_angle = dir * alpha;
                        return ray;
                    }
                    const double len = std::hypot(run, dv);
                    r += run;
                    z = z_target;
                    ray.arc_length += len;
                    ray.travel_time += len / c_m;
                    push(c_m);
                }

                switch (event)
                {
                case Event::interface:
                    m = dir > 0 ? m + 1 : m - 1;
                    alpha = alpha_next;
                    break;
                case Event::turn:
                    dir = -dir;
                    ++ray.turning_points;
                    break;
                case Event::boundary:
                    if (dir > 0)
                        ++ray.bottom_bounces;
                    else
                        ++ray.surface_bounces;
                    dir = -dir;
                    if (counts)
                        counts->back() = {ray.surface_bounces, ray.bottom_bounces};
                    if (ray.surface_bounces + ray.bottom_bounces > max_bounces)
                    {
                        ray.final_angle = dir * alpha;
                        return ray;
                    }
                    break;
                }
            }
            ray.final_angle = dir * alpha;
            return ray;
        }
    }

    SnellOutcome step_snell(double alpha_m, double c_m, double c_next)
    {
        const double x = (c_next / c_m) * std::cos(alpha_m);
        if (x <= 1.0)
            return {false, std::acos(x)};
        return {true, 0.0};
    }

    std::vector<double> TraceOptions::uniform_grid_deg(double lo, double hi, double step)
    {
        std::vector<double> g;
        const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
        g.reserve(n + 1);
        for (std::size_t i = 0; i <= n; ++i)
            g.push_back((lo + static_cast<double>(i) * step) * std::numbers::pi / 180.0);
        return g;
    }

    void validate(const TraceOptions &opts)
    {
        if (opts.angle_grid.empty())
            throw ValidationError("angle grid must not be empty");
        if (!(opts.hit_tolerance > 0.0))
            throw ValidationError("hit tolerance must be positive");
        if (!(opts.max_range > 0.0))
            throw ValidationError("max range must be positive");
        if (opts.max_bounces < 0 || opts.bisection_iters < 0)
            throw ValidationError("bounce and iteration limits must be non-negative");
    }

    Ray trace_ray(const LayeredMedium &medium, const Environment &, Point src, double alpha0,
                  const TraceOptions &opts)
    {
        return trace_impl(medium, src, alpha0, opts.max_bounces, opts.max_range, nullptr);
    }

    double transmission_loss(double arc_length, BounceSignature sig, const Environment &env)
    {
        return 20.0 * std::log10(std::max(arc_length, 1.0)) + env.absorption_db_per_km * arc_length / 1000.0 +
               sig.surface * env.surface_loss_db + sig.bottom * env.bottom_loss_db;
    }

    double transmission_loss(const Ray &ray, const Environment &env)
    {
        return transmission_loss(ray.arc_length, {ray.surface_bounces, ray.bottom_bounces}, env);
    }

    std::complex<double> path_gain(const Eigenray &ray, double f_c)
    {
        const double mag = std::pow(10.0, -ray.tl_db / 20.0);
        // Drop whole cycles first so the phase keeps full precision.
        const double cycles = f_c * ray.travel_time;
        const double frac = cycles - std::floor(cycles);
        return std::polar(mag, -2.0 * std::numbers::pi * frac);
    }

    Eigenray reversed(const Eigenray &ray)
    {
        Eigenray out = ray;
        out.departure_angle = -ray.arrival_angle;
        out.arrival_angle = -ray.departure_angle;
        return out;
    }

    RayFan::RayFan(const LayeredMedium &medium, const Environment &env, Point src, TraceOptions opts)
        : medium_(medium), env_(env), src_(src), opts_(std::move(opts))
    {
        validate(opts_);
        tracks_.resize(opts_.angle_grid.size());
        std::vector<BounceCount> counts;
        for (std::size_t i = 0; i < opts_.angle_grid.size(); ++i)
        {
            const double a = opts_.angle_grid[i];
            if (a == 0.0 && medium_.is_constant())
                continue;
            counts.clear();
            const Ray ray = trace_impl(medium_, {0.0, src_.z}, a, opts_.max_bounces, opts_.max_range, &counts);
            auto &track = tracks_[i];
            track.reserve(ray.polyline.size());
            for (std::size_t k = 0; k < ray.polyline.size(); ++k)
                track.push_back({ray.polyline[k].r, ray.polyline[k].z, counts[k].surf, counts[k].bot});
        }
    }

    RayFan::Probe RayFan::probe(std::size_t i, double range, double z_dst) const
    {
        const auto &tr = tracks_[i];
        if (tr.size() < 2 || tr.back().r < range)
            return {};
        auto it = std::lower_bound(tr.begin(), tr.end(), range, [](const Sample &s, double v)
                                   { return s.r < v; });
        if (it == tr.begin())
            ++it;
        const Sample &b = *it;
        const Sample &a = *(it - 1);
        const double w = b.r > a.r ? (range - a.r) / (b.r - a.r) : 1.0;
        const double z = a.z + w * (b.z - a.z);
        return {true, z - z_dst, {a.surf, a.bot}};
    }

    std::vector<Eigenray> RayFan::eigenrays_to(Point dst) const
    {
        const double D = std::abs(dst.r - src_.r);
        const double H = medium_.total_depth();
        if (!(D > 0.0))
            throw InvalidArgument("source and receiver must be horizontally separated");
        if (!(dst.z >= 0.0 && dst.z <= H))
            throw InvalidArgument("receiver depth outside the water column");
        if (D > opts_.max_range)
            throw NoEigenray("receiver beyond the maximum trace range");

        struct Shot
        {
            bool valid = false;
            double miss = 0.0;
            BounceSignature sig;
            Ray ray;
        };
        auto shoot = [&](double a)
        {
            // The exact horizontal ray of a constant medium is the limit of its neighbours.
            if (a == 0.0 && medium_.is_constant())
                a = 1e-12;
            Shot s;
            s.ray = trace_impl(medium_, {0.0, src_.z}, a, opts_.max_bounces, D, nullptr);
            s.valid = s.ray.reached_range;
            s.miss = s.ray.polyline.back().z - dst.z;
            s.sig = {s.ray.surface_bounces, s.ray.bottom_bounces};
            return s;
        };

        const auto &grid = opts_.angle_grid;
        const double fine_tol = 1e-9 * std::max(1.0, H);
        std::vector<Eigenray> found;
        std::vector<double> found_miss;
        // Near-grazing rays in a stack of homogeneous layers give a sawtooth
        // miss function, so one physical arrival can produce a cluster of
        // roots. Keep the best-converged root of each cluster.
        auto accept = [&](const Shot &s)
        {
            if (!s.valid || std::abs(s.miss) > opts_.hit_tolerance)
                return;
            Eigenray e;
            e.departure_angle = s.ray.departure_angle;
            e.arrival_angle = s.ray.final_angle;
            e.horizontal_range = D;
            e.travel_time = s.ray.travel_time;
            e.arc_length = s.ray.arc_length;
            e.bounce_signature = s.sig;
            e.tl_db = transmission_loss(s.ray, env_);
            e.gain = path_gain(e, opts_.carrier_hz);
            for (std::size_t k = 0; k < found.size(); ++k)
                if (found[k].bounce_signature == s.sig &&
                    std::abs(found[k].departure_angle - e.departure_angle) <= opts_.merge_angle)
                {
                    if (std::abs(s.miss) < found_miss[k])
                    {
                        found[k] = e;
                        found_miss[k] = std::abs(s.miss);
                    }
                    return;
                }
            found.push_back(e);
            found_miss.push_back(std::abs(s.miss));
        };

        std::vector<Probe> probes(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
            probes[i] = probe(i, D, dst.z);

        for (std::size_t i = 0; i < grid.size(); ++i)
        {
            if (probes[i].valid && probes[i].miss == 0.0)
                accept(shoot(grid[i]));
            if (i + 1 == grid.size())
                break;
            const Probe &pa = probes[i];
            const Probe &pb = probes[i + 1];
            if (!pa.valid || !pb.valid || pa.sig != pb.sig)
                continue;
            if (!((pa.miss < 0.0 && pb.miss > 0.0) || (pa.miss > 0.0 && pb.miss < 0.0)))
                continue;

            // Illinois regula falsi inside the bracket, with a bisection
            // fallback when an interior ray leaves the bounce class.
            double a = grid[i], b = grid[i + 1];
            double fa = pa.miss, fb = pb.miss;
            Shot best;
            int side = 0;
            for (int it = 0; it < opts_.bisection_iters; ++it)
            {
                double x = b - fb * (b - a) / (fb - fa);
                if (!(x > std::min(a, b) && x < std::max(a, b)))
                    x = 0.5 * (a + b);
                Shot s = shoot(x);
                if (!s.valid || s.sig != pa.sig)
                {
                    x = 0.5 * (a + b);
                    s = shoot(x);
                    if (!s.valid || s.sig != pa.sig)
                        break;
                }
                if (!best.valid || std::abs(s.miss) < std::abs(best.miss))
                    best = s;
                if (std::abs(s.miss) <= fine_tol)
                    break;
                if ((s.miss < 0.0) == (fa < 0.0))
                {
                    a = x;
                    fa = s.miss;
                    if (side == -1)
                        fb *= 0.5;
                    side = -1;
                }
                else
                {
                    b = x;
                    fb = s.miss;
                    if (side == 1)
                        fa *= 0.5;
                    side = 1;
                }
            }
            if (best.valid)
                accept(best);
        }

        if (found.empty())
            throw NoEigenray("no eigenray between (" + std::to_string(src_.r) + ", " + std::to_string(src_.z) +
                             ") and (" + std::to_string(dst.r) + ", " + std::to_string(dst.z) + ")");
        std::sort(found.begin(), found.end(), [](const Eigenray &x, const Eigenray &y)
                  { return x.tl_db != y.tl_db ? x.tl_db < y.tl_db : x.departure_angle < y.departure_angle; });
        return found;
    }

    std::vector<Eigenray> find_eigenrays(const LayeredMedium &medium, const Environment &env, Point src,
                                         Point dst, const TraceOptions &opts)
    {
        TraceOptions o = opts;
        o.max_range = std::min(opts.max_range, std::abs(dst.r - src.r));
        if (!(o.max_range > 0.0))
            throw InvalidArgument("source and receiver must be horizontally separated");
        return RayFan(medium, env, src, std::move(o)).eigenrays_to(dst);
    }
}
