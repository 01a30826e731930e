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

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lightpoint
{
    namespace
    {
        constexpr cdouble j1{0.0, 1.0};

        double req_for(const MultiBeamProblem &pr, std::size_t p)
        {
            return pr.g_req.size() == 1 ? pr.g_req.front() : pr.g_req[p];
        }

        CVector capture_of(const MultiBeamProblem &pr)
        {
            if (pr.capture.size() == 0)
                return CVector::Ones(static_cast<Eigen::Index>(pr.aris_side.n_elements));
            return pr.capture;
        }

        std::vector<double> grid_of(const MultiBeamProblem &pr)
        {
            if (!pr.sidelobe_grid.empty())
                return pr.sidelobe_grid;
            return sidelobe_grid(pr.target_aods, pr.aris_side);
        }

        cdouble response(const CVector &w, const ArrayGeometry &g, double psi)
        {
            return steering_vector(g, psi).dot(w); // conjugates the steering vector
        }
    }

    AstarCoefficients astar_forward(const AstarGains &gains)
    {
        return {j1 * (gains.g_t - gains.g_r) / 2.0, j1 * (gains.g_t + gains.g_r) / 2.0};
    }

    AstarGains astar_inverse(const AstarCoefficients &c)
    {
        return {-j1 * (c.t + c.s), -j1 * (c.t - c.s)};
    }

    CVector capture_weights(std::span<const double> incident_aoas, const ArrayGeometry &g)
    {
        if (incident_aoas.empty())
            throw InvalidArgument("capture_weights needs at least one incident path");
        const auto n = static_cast<Eigen::Index>(g.n_elements);
        CVector w = CVector::Zero(n);
        for (double phi : incident_aoas)
            for (Eigen::Index t = 0; t < n; ++t)
                w(t) += std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(t) * g.spacing * phi);
        return w;
    }

    std::vector<double> beam_pattern(const CVector &weights, const ArrayGeometry &g, std::span<const double> angles)
    {
        if (weights.size() != static_cast<Eigen::Index>(g.n_elements))
            throw DimensionMismatch("weight vector length differs from the element count");
        std::vector<double> out;
        out.reserve(angles.size());
        for (double psi : angles)
            out.push_back(std::abs(response(weights, g, psi)));
        return out;
    }

    std::vector<double> sidelobe_grid(std::span<const double> targets, double guard)
    {
        std::vector<double> out;
        for (int deg = -90; deg <= 90; ++deg)
        {
            const double psi = std::sin(deg * std::numbers::pi / 180.0);
            const bool near = std::any_of(targets.begin(), targets.end(),
                                          [&](double t) { return std::abs(psi - t) < guard; });
            if (!near)
                out.push_back(psi);
        }
        return out;
    }

    std::vector<double> sidelobe_grid(std::span<const double> targets, const ArrayGeometry &g)
    {
        return sidelobe_grid(targets, 1.0 / g.aperture());
    }

    void validate(const MultiBeamProblem &pr)
    {
        validate(pr.aris_side);
        const std::size_t P = pr.target_aods.size();
        if (P == 0)
            throw ValidationError("beam: at least one target is required");
        if (pr.g_req.size() != 1 && pr.g_req.size() != P)
            throw ValidationError("beam: g_req needs one value or one per target");
        for (double g : pr.g_req)
            if (!(g > 0.0))
                throw ValidationError("beam: g_req must be positive");
        if (!(pr.eps_cross > 0.0) || !(pr.g_max > 0.0))
            throw ValidationError("beam: eps_cross and g_max must be positive");
        for (double t : pr.target_aods)
            if (std::abs(t) > 1.0)
                throw ValidationError("beam: targets must be directional sines in [-1, 1]");
        const double res = 1.0 / pr.aris_side.aperture();
        for (std::size_t a = 0; a < P; ++a)
            for (std::size_t b = a + 1; b < P; ++b)
                if (std::abs(pr.target_aods[a] - pr.target_aods[b]) < res - 1e-12)
                    throw ValidationError("beam: targets must be separated by at least 1/A_a");
        if (pr.capture.size() != 0 && pr.capture.size() != static_cast<Eigen::Index>(pr.aris_side.n_elements))
            throw ValidationError("beam: capture weights must have one entry per element");
    }

    BeamSolution try_synthesize_multibeam(const MultiBeamProblem &pr)
    {
        validate(pr);
        const auto &g = pr.aris_side;
        const auto Na = static_cast<Eigen::Index>(g.n_elements);
        const auto P = static_cast<Eigen::Index>(pr.target_aods.size());
        const Eigen::Index n = 2 * Na * P + 1;
        const Eigen::Index ib = n - 1;
        const CVector cap = capture_of(pr);
        const std::vector<double> grid = grid_of(pr);

        // Rows [Re; Im] of e(psi)^H T_p as a linear map of x.
        auto response_rows = [&](double psi, Eigen::Index p)
        {
            Eigen::MatrixXd R = Eigen::MatrixXd::Zero(2, n);
            const CVector e = steering_vector(g, psi);
            for (Eigen::Index t = 0; t < Na; ++t)
            {
                const cdouble a = std::conj(e(t));
                R(0, 2 * Na * p + t) = a.real();
                R(0, 2 * Na * p + Na + t) = -a.imag();
                R(1, 2 * Na * p + t) = a.imag();
                R(1, 2 * Na * p + Na + t) = a.real();
            }
            return R;
        };

        SocpProblem prob;
        prob.objective = Eigen::VectorXd::Zero(n);
        prob.objective(ib) = 1.0;
        for (Eigen::Index p = 0; p < P; ++p)
        {
            const double tp = pr.target_aods[static_cast<std::size_t>(p)];
            SocCone main;
            main.c = response_rows(tp, p).row(0).transpose();
            main.d = -req_for(pr, static_cast<std::size_t>(p));
            main.family = "main_lobe";
            prob.cones.push_back(std::move(main));
            for (Eigen::Index k = 0; k < P; ++k)
            {
                if (k == p)
                    continue;
                SocCone cross;
                cross.A = response_rows(tp, k);
                cross.b = Eigen::VectorXd::Zero(2);
                cross.c = Eigen::VectorXd::Zero(n);
                cross.d = pr.eps_cross;
                cross.family = "cross_interference";
                prob.cones.push_back(std::move(cross));
            }
            for (double psi : grid)
            {
                SocCone side;
                side.A = response_rows(psi, p);
                side.b = Eigen::VectorXd::Zero(2);
                side.c = Eigen::VectorXd::Zero(n);
                side.c(ib) = 1.0;
                side.family = "sidelobe";
                prob.cones.push_back(std::move(side));
            }
        }
        for (Eigen::Index t = 0; t < Na; ++t)
        {
            const double m = std::abs(cap(t));
            if (m == 0.0)
                continue;
            SocCone c;
            c.A = Eigen::MatrixXd::Zero(2, n);
            for (Eigen::Index p = 0; p < P; ++p)
            {
                c.A(0, 2 * Na * p + t) = m;
                c.A(1, 2 * Na * p + Na + t) = m;
            }
            c.b = Eigen::VectorXd::Zero(2);
            c.c = Eigen::VectorXd::Zero(n);
            c.d = pr.g_max;
            c.family = "magnitude_cap";
            prob.cones.push_back(std::move(c));
        }
        // Keeps the feasible set bounded when some capture weight vanishes.
        SocCone box;
        box.A = Eigen::MatrixXd::Identity(n, n);
        box.b = Eigen::VectorXd::Zero(n);
        box.c = Eigen::VectorXd::Zero(n);
        box.d = 1e3 * std::max(1.0, pr.g_max);
        box.family = "bound";
        prob.cones.push_back(std::move(box));

        const SocpResult res = solve_socp(prob);
        BeamSolution sol;
        sol.feasible = res.feasible;
        if (!res.feasible)
        {
            for (const auto &f : res.violated)
                sol.certificate += (sol.certificate.empty() ? "" : ", ") + f;
            if (sol.certificate.empty())
                sol.certificate = "no strictly feasible point";
        }
        sol.t_total = CVector::Zero(Na);
        for (Eigen::Index p = 0; p < P; ++p)
        {
            CVector tp(Na);
            for (Eigen::Index t = 0; t < Na; ++t)
                tp(t) = {res.x(2 * Na * p + t), res.x(2 * Na * p + Na + t)};
            sol.t_total += tp;
            sol.t_g_per_beam.push_back(std::move(tp));
        }
        sol.t_total = cap.cwiseProduct(sol.t_total);
        sol.beta = res.x(ib);
        return sol;
    }

    BeamSolution synthesize_multibeam(const MultiBeamProblem &pr)
    {
        BeamSolution sol = try_synthesize_multibeam(pr);
        if (!sol.feasible)
            throw Infeasible("beam synthesis violates: " + sol.certificate);
        return sol;
    }

    BeamSolution steering_baseline(const MultiBeamProblem &pr)
    {
        validate(pr);
        const auto &g = pr.aris_side;
        const CVector cap = capture_of(pr);
        const std::vector<double> grid = grid_of(pr);
        BeamSolution sol;
        sol.t_total = CVector::Zero(static_cast<Eigen::Index>(g.n_elements));
        for (std::size_t p = 0; p < pr.target_aods.size(); ++p)
        {
            CVector tp = req_for(pr, p) * steering_vector(g, pr.target_aods[p]);
            for (double m : beam_pattern(tp, g, grid))
                sol.beta = std::max(sol.beta, m);
            sol.t_total += tp;
            sol.t_g_per_beam.push_back(std::move(tp));
        }
        sol.t_total = cap.cwiseProduct(sol.t_total);
        sol.feasible = true;
        return sol;
    }

    std::vector<ConstraintCheck> check_constraints(const MultiBeamProblem &pr, const BeamSolution &sol,
                                                   std::span<const double> grid, double beta)
    {
        const auto &g = pr.aris_side;
        const std::size_t P = pr.target_aods.size();
        if (sol.t_g_per_beam.size() != P)
            throw DimensionMismatch("solution beam count differs from the target count");
        std::vector<ConstraintCheck> out;
        for (std::size_t p = 0; p < P; ++p)
        {
            const double req = req_for(pr, p);
            const double got = std::abs(response(sol.t_g_per_beam[p], g, pr.target_aods[p]));
            out.push_back({"main_lobe[" + std::to_string(p) + "]", req, got, got - req});
        }
        double cross = 0.0;
        for (std::size_t p = 0; p < P; ++p)
            for (std::size_t k = 0; k < P; ++k)
                if (k != p)
                    cross = std::max(cross, std::abs(response(sol.t_g_per_beam[k], g, pr.target_aods[p])));
        if (P > 1)
            out.push_back({"cross_interference", pr.eps_cross, cross, pr.eps_cross - cross});
        double side = 0.0;
        for (const auto &w : sol.t_g_per_beam)
            for (double m : beam_pattern(w, g, grid))
                side = std::max(side, m);
        out.push_back({"sidelobe", beta, side, beta - side});
        const double cap = sol.t_total.cwiseAbs().maxCoeff();
        out.push_back({"magnitude_cap", pr.g_max, cap, pr.g_max - cap});
        return out;
    }

    CVector compose_phi(const CVector &t_total, std::size_t n_a)
    {
        if (t_total.size() != static_cast<Eigen::Index>(n_a))
            throw DimensionMismatch("aRIS coefficient vector length differs from N_a");
        const auto n = static_cast<Eigen::Index>(n_a);
        CVector d(n * n);
        for (Eigen::Index v = 0; v < n; ++v)
            d.segment(v * n, n).setConstant(t_total(v));
        return d;
    }
}
