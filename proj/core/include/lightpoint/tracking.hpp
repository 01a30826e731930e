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

#ifndef LIGHTPOINT_TRACKING_HPP
#define LIGHTPOINT_TRACKING_HPP

#include "lightpoint/channel.hpp"
#include "lightpoint/raytrace.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace lightpoint
{
    struct GaussianBeamField
    {
        double i0 = 700.0;
        double sigma = 50.0; // [m]
        Point center;
    };

    void validate(const GaussianBeamField &f);

    struct TrackerConfig
    {
        double delta = 0.5;     // probe step [m]
        double eta = 4.0;       // step size [m^2 per energy unit]
        std::size_t max_iters = 50;
        double tol = 1e-4;      // relative improvement over the window
        double r_max = 100.0;   // deployment radius about the anchor [m]
        std::size_t window = 3; // steps in the improvement window
    };

    // Lipschitz constant of the energy gradient, 2 A_max / sigma^2.
    double lipschitz(const GaussianBeamField &f, const ArrayGeometry &aris_side, double lambda_c);

    // Rejects eta outside (0, 2/L) for this field.
    void validate(const TrackerConfig &cfg, const GaussianBeamField &f, const ArrayGeometry &aris_side,
                  double lambda_c);

    struct TrackerState
    {
        Point x;
        double a_received = 0.0;
        std::array<double, 2> g_hat{}; // (r, z)
        std::size_t iter = 0;
    };

    double intensity(const GaussianBeamField &f, Point p);
    double received_energy(const GaussianBeamField &f, Point p, const ArrayGeometry &aris_side, double lambda_c);
    double max_energy(const GaussianBeamField &f, const ArrayGeometry &aris_side, double lambda_c);

    // Forward differences along r and z.
    std::array<double, 2> estimate_gradient(const GaussianBeamField &f, Point p, double delta,
                                            const ArrayGeometry &aris_side, double lambda_c);

    TrackerState initial_state(const GaussianBeamField &f, Point start, double delta,
                               const ArrayGeometry &aris_side, double lambda_c);

    TrackerState track_step(const TrackerState &s, const GaussianBeamField &f, const TrackerConfig &cfg,
                            Point anchor, const ArrayGeometry &aris_side, double lambda_c);

    // The anchor of the deployment disk is the start point.
    std::vector<TrackerState> run_tracking(const GaussianBeamField &f, const TrackerConfig &cfg, Point start,
                                           const ArrayGeometry &aris_side, double lambda_c);

    double gamma_track(double a_received, double a_max);
}

#endif
