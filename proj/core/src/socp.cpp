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

#include "lightpoint/socp.hpp"
#include "lightpoint/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace lightpoint
{
    namespace
    {
        using Eigen::MatrixXd;
        using Eigen::VectorXd;

        // Barrier value, or +inf outside the domain.
        double barrier(const std::vector<SocCone> &cones, const VectorXd &x)
        {
            double f = 0.0;
            for (const auto &k : cones)
            {
                const double s = k.c.dot(x) + k.d;
                if (s <= 0.0)
                    return std::numeric_limits<double>::infinity();
                if (k.A.rows() == 0)
                {
                    f -= std::log(s);
                    continue;
                }
                const VectorXd u = k.A * x + k.b;
                const double w = s * s - u.squaredNorm();
                if (w <= 0.0)
                    return std::numeric_limits<double>::infinity();
                f -= std::log(w);
            }
            return f;
        }

        void barrier_derivs(const std::vector<SocCone> &cones, const VectorXd &x, VectorXd &g, MatrixXd &H)
        {
            const auto n = x.size();
            g.setZero(n);
            H.setZero(n, n);
            for (const auto &k : cones)
            {
                const double s = k.c.dot(x) + k.d;
                if (k.A.rows() == 0)
                {
                    g -= k.c / s;
                    H.noalias() += (k.c * k.c.transpose()) / (s * s);
                    continue;
                }
                const VectorXd u = k.A * x + k.b;
                const double w = s * s - u.squaredNorm();
                const VectorXd gw = 2.0 * s * k.c - 2.0 * k.A.transpose() * u;
                g -= gw / w;
                H.noalias() += (gw * gw.transpose()) / (w * w);
                H.noalias() -= (2.0 / w) * (k.c * k.c.transpose());
                H.noalias() += (2.0 / w) * (k.A.transpose() * k.A);
            }
        }

        double degree(const std::vector<SocCone> &cones)
        {
            double m = 0.0;
            for (const auto &k : cones)
                m += k.A.rows() == 0 ? 1.0 : 2.0;
            return m;
        }

        // Path-following barrier method from a strictly feasible x.
        // stop(x) allows early exit after any centering step.
        void barrier_method(const VectorXd &obj, const std::vector<SocCone> &cones, VectorXd &x,
                            const SocpOptions &opts, int &steps, const std::function<bool(const VectorXd &)> &stop)
        {
            const double m = degree(cones);
            double t = 1.0;
            VectorXd g;
            MatrixXd H;
            for (int outer = 0; outer < 200; ++outer)
            {
                for (int it = 0; it < opts.max_newton; ++it)
                {
                    barrier_derivs(cones, x, g, H);
                    g += t * obj;
                    H.diagonal().array() += 1e-12 * std::max(1.0, H.diagonal().cwiseAbs().maxCoeff());
                    const VectorXd dx = -H.ldlt().solve(g);
                    const double lambda2 = -g.dot(dx);
                    ++steps;
                    if (!(lambda2 > 0.0) || lambda2 / 2.0 <= opts.newton_tol)
                        break;
                    const double f0 = t * obj.dot(x) + barrier(cones, x);
                    double step = 1.0;
                    bool moved = false;
                    for (int ls = 0; ls < 80; ++ls, step *= 0.5)
                    {
                        const VectorXd xn = x + step * dx;
                        const double fb = barrier(cones, xn);
                        if (!std::isfinite(fb))
                            continue;
                        const double f1 = t * obj.dot(xn) + fb;
                        if (f1 <= f0 - 0.25 * step * lambda2)
                        {
                            x = xn;
                            // Progress below rounding level ends the centering step.
                            moved = f0 - f1 > 1e-13 * std::max(1.0, std::abs(f0));
                            break;
                        }
                    }
                    if (!moved)
                        break;
                }
                if (stop && stop(x))
                    return;
                if (m / t < opts.gap_tol)
                    return;
                t *= opts.mu;
            }
        }
    }

    double cone_margin(const SocCone &cone, const Eigen::VectorXd &x)
    {
        const double s = cone.c.dot(x) + cone.d;
        if (cone.A.rows() == 0)
            return s;
        return s - (cone.A * x + cone.b).norm();
    }

    SocpResult solve_socp(const SocpProblem &problem, const SocpOptions &opts)
    {
        const auto n = problem.objective.size();
        for (const auto &k : problem.cones)
            if (k.c.size() != n || (k.A.rows() > 0 && (k.A.cols() != n || k.b.size() != k.A.rows())))
                throw DimensionMismatch("cone '" + k.family + "' does not match the variable count");

        SocpResult res;
        VectorXd x = VectorXd::Zero(n);

        double worst = std::numeric_limits<double>::infinity();
        for (const auto &k : problem.cones)
            worst = std::min(worst, cone_margin(k, x));

        if (!(worst > 0.0))
        {
            // Phase I: minimize s subject to every cone relaxed by s, s >= -1.
            std::vector<SocCone> relaxed;
            relaxed.reserve(problem.cones.size() + 1);
            for (const auto &k : problem.cones)
            {
                SocCone r;
                r.A = MatrixXd::Zero(k.A.rows(), n + 1);
                if (k.A.rows() > 0)
                    r.A.leftCols(n) = k.A;
                r.b = k.A.rows() > 0 ? k.b : VectorXd();
                r.c = VectorXd::Zero(n + 1);
                r.c.head(n) = k.c;
                r.c(n) = 1.0;
                r.d = k.d;
                relaxed.push_back(std::move(r));
            }
            SocCone floor;
            floor.c = VectorXd::Zero(n + 1);
            floor.c(n) = 1.0;
            floor.d = 1.0;
            relaxed.push_back(floor);

            VectorXd y = VectorXd::Zero(n + 1);
            y(n) = std::max(-worst, 0.0) + 1.0;
            VectorXd obj = VectorXd::Zero(n + 1);
            obj(n) = 1.0;
            const double margin = 1e-7;
            barrier_method(obj, relaxed, y, opts, res.newton_steps,
                           [n, margin](const VectorXd &v) { return v(n) < -margin; });
            x = y.head(n);
            res.infeasibility = y(n);
            if (!(y(n) < 0.0))
            {
                // Families binding at the relaxed optimum carry the violation.
                const double cut = -0.5 * std::max(y(n), 0.0);
                for (const auto &k : problem.cones)
                    if (cone_margin(k, x) < std::min(cut, 0.0) &&
                        std::find(res.violated.begin(), res.violated.end(), k.family) == res.violated.end())
                        res.violated.push_back(k.family);
                res.x = x;
                res.objective = problem.objective.dot(x);
                return res;
            }
        }

        barrier_method(problem.objective, problem.cones, x, opts, res.newton_steps, {});
        res.feasible = true;
        res.x = x;
        res.objective = problem.objective.dot(x);
        return res;
    }
}
