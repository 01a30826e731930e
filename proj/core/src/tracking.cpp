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

#include "lightpoint/tracking.hpp"
#include "lightpoint/errors.hpp"

#include <algorithm>
#include <cmath>

namespace lightpoint
{
    namespace
    {
        double aperture_factor(const ArrayGeometry &g, double lambda_c)
        {
            const double n = static_cast<double>(g.n_elements);
            return n * n * g.spacing * g.spacing * lambda_c * lambda_c;
        }
    }

    void validate(const GaussianBeamField &f)
    {
        if (!(f.i0 > 0.0) || !(f.sigma > 0.0))
            throw ValidationError("tracking: i0 and sigma must be positive");
    }

    double lipschitz(const GaussianBeamField &f, const ArrayGeometry &g, double lambda_c)
    {
        return 2.0 * max_energy(f, g, lambda_c) / (f.sigma * f.sigma);
    }

    void validate(const TrackerConfig &cfg, const GaussianBeamField &f, const ArrayGeometry &g, double lambda_c)
    {
        validate(f);
        if (!(cfg.delta > 0.0))
            throw ValidationError("tracking: delta must be positive");
        if (!(cfg.r_max > 0.0) || !(cfg.tol >= 0.0) || cfg.window == 0)
            throw ValidationError("tracking: r_max, tol and window must be positive");
        const double L = lipschitz(f, g, lambda_c);
        if (!(cfg.eta > 0.0) || !(cfg.eta < 2.0 / L))
            throw ValidationError("tracking: eta must lie in (0, 2/L) with 2/L = " + std::to_string(2.0 / L));
    }

    double intensity(const GaussianBeamField &f, Point p)
    {
        const double dr = p.r - f.center.r, dz = p.z - f.center.z;
        return f.i0 * std::exp(-(dr * dr + dz * dz) / (f.sigma * f.sigma));
    }

    double received_energy(const GaussianBeamField &f, Point p, const ArrayGeometry &g, double lambda_c)
    {
        return intensity(f, p) * aperture_factor(g, lambda_c);
    }

    double max_energy(const GaussianBeamField &f, const ArrayGeometry &g, double lambda_c)
    {
        return f.i0 * aperture_factor(g, lambda_c);
    }

    std::array<double, 2> estimate_gradient(const GaussianBeamField &f, Point p, double delta,
                                            const ArrayGeometry &g, double lambda_c)
    {
        if (!(delta > 0.0))
            throw InvalidArgument("finite-difference step must be positive");
        const double a0 = received_energy(f, p, g, lambda_c);
        const double ar = received_energy(f, {p.r + delta, p.z}, g, lambda_c);
        const double az = received_energy(f, {p.r, p.z + delta}, g, lambda_c);
        return {(ar - a0) / delta, (az - a0) / delta};
    }

    TrackerState initial_state(const GaussianBeamField &f, Point start, double delta, const ArrayGeometry &g,
                               double lambda_c)
    {
        return {start, received_energy(f, start, g, lambda_c), estimate_gradient(f, start, delta, g, lambda_c), 0};
    }

    TrackerState track_step(const TrackerState &s, const GaussianBeamField &f, const TrackerConfig &cfg,
                            Point anchor, const ArrayGeometry &g, double lambda_c)
    {
        Point x{s.x.r + cfg.eta * s.g_hat[0], s.x.z + cfg.eta * s.g_hat[1]};
        const double dr = x.r - anchor.r, dz = x.z - anchor.z;
        const double dist = std::hypot(dr, dz);
        if (dist > cfg.r_max)
            x = {anchor.r + dr * cfg.r_max / dist, anchor.z + dz * cfg.r_max / dist};
        TrackerState next = initial_state(f, x, cfg.delta, g, lambda_c);
        next.iter = s.iter + 1;
        return next;
    }

    std::vector<TrackerState> run_tracking(const GaussianBeamField &f, const TrackerConfig &cfg, Point start,
                                           const ArrayGeometry &g, double lambda_c)
    {
        validate(cfg, f, g, lambda_c);
        std::vector<TrackerState> trace{initial_state(f, start, cfg.delta, g, lambda_c)};
        while (trace.back().iter < cfg.max_iters)
        {
            trace.push_back(track_step(trace.back(), f, cfg, start, g, lambda_c));
            if (trace.size() > cfg.window)
            {
                const double prev = trace[trace.size() - 1 - cfg.window].a_received;
                const double now = trace.back().a_received;
                if (prev > 0.0 && (now - prev) / prev < cfg.tol)
                    break;
            }
        }
        return trace;
    }

    double gamma_track(double a_received, double a_max)
    {
        if (!(a_max > 0.0))
            throw InvalidArgument("a_max must be positive");
        return std::clamp(a_received / a_max, 0.0, 1.0);
    }
}
