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

#ifndef LIGHTPOINT_RAYTRACE_HPP
#define LIGHTPOINT_RAYTRACE_HPP

#include "lightpoint/env.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace lightpoint
{
    struct Point
    {
        double r = 0.0; // Horizontal range [m]
        double z = 0.0; // Depth [m]
        bool operator==(const Point &) const = default;
    };

    struct SnellOutcome
    {
        bool turned = false; // Ray cannot enter the next layer
        double alpha = 0.0;  // Grazing angle in the next layer when refracted [rad]
    };

    SnellOutcome step_snell(double alpha_m, double c_m, double c_next);

    // One straight piece of a ray inside a single layer.
    struct RaySegment
    {
        double alpha; // Grazing angle magnitude [rad]
        double c;     // Layer speed [m/s]
    };

    struct Ray
    {
        double departure_angle = 0.0;  // Positive = downward [rad]
        std::vector<Point> polyline;
        std::vector<RaySegment> segments; // segments[i] joins polyline[i] and polyline[i+1]
        int surface_bounces = 0;
        int bottom_bounces = 0;
        int turning_points = 0;
        double travel_time = 0.0; // [s]
        double arc_length = 0.0;  // [m]
        double final_angle = 0.0; // Signed grazing angle at the last point [rad]
        bool reached_range = false; // Terminated at max_range rather than by a bounce limit
    };

    struct TraceOptions
    {
        std::vector<double> angle_grid; // Departure angles [rad]
        int max_bounces = 1;
        double hit_tolerance = 1.0; // [m]
        double max_range = 1e5;     // [m]
        int bisection_iters = 60;
        double carrier_hz = 9000.0; // Used for the path phase
        double merge_angle = 0.0087; // Same-class eigenrays closer than this are one arrival [rad]

        // Uniform grid from lo to hi inclusive (degrees) with the given step.
        static std::vector<double> uniform_grid_deg(double lo, double hi, double step);
    };

    void validate(const TraceOptions &opts);

    Ray trace_ray(const LayeredMedium &medium, const Environment &env, Point src, double alpha0,
                  const TraceOptions &opts);

    struct BounceSignature
    {
        int surface = 0;
        int bottom = 0;
        auto operator<=>(const BounceSignature &) const = default;
    };

    struct Eigenray
    {
        double departure_angle = 0.0;  // [rad]
        double arrival_angle = 0.0;    // Signed propagation grazing angle at dst [rad]
        double horizontal_range = 0.0; // [m]
        double travel_time = 0.0;      // [s]
        double arc_length = 0.0;       // [m]
        double tl_db = 0.0;
        std::complex<double> gain;
        BounceSignature bounce_signature;
    };

    // Spherical spreading, linear absorption and per-bounce penalties.
    double transmission_loss(const Ray &ray, const Environment &env);
    double transmission_loss(double arc_length, BounceSignature sig, const Environment &env);

    std::complex<double> path_gain(const Eigenray &ray, double f_c);

    // The eigenray as seen when propagating in the opposite direction.
    Eigenray reversed(const Eigenray &ray);

    // Rays launched from one source over the whole angle grid, kept for
    // repeated eigenray queries against many receivers.
    class RayFan
    {
    public:
        RayFan(const LayeredMedium &medium, const Environment &env, Point src, TraceOptions opts);

        // Eigenrays from the source to dst, sorted by tl_db. Throws NoEigenray.
        std::vector<Eigenray> eigenrays_to(Point dst) const;

        const Point &source() const { return src_; }
        const TraceOptions &options() const { return opts_; }

    private:
        struct Sample
        {
            double r, z;
            int surf, bot;
        };
        struct Probe
        {
            bool valid = false;
            double miss = 0.0;
            BounceSignature sig;
        };
        Probe probe(std::size_t i, double range, double z_dst) const;

        LayeredMedium medium_;
        Environment env_;
        Point src_;
        TraceOptions opts_;
        std::vector<std::vector<Sample>> tracks_;
    };

    std::vector<Eigenray> find_eigenrays(const LayeredMedium &medium, const Environment &env, Point src,
                                         Point dst, const TraceOptions &opts);
}

#endif
