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

#include "lightpoint/channel.hpp"
#include "lightpoint/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace lightpoint
{
    namespace
    {
        // Separation test with a little slack for angles sitting on the threshold.
        constexpr double sep_slack = 1e-12;

        CVector kron_ones(const CVector &v, std::size_t n)
        {
            CVector out(v.size() * static_cast<Eigen::Index>(n));
            for (Eigen::Index i = 0; i < v.size(); ++i)
                out.segment(i * static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)).setConstant(v(i));
            return out;
        }
    }

    void validate(const ArrayGeometry &g)
    {
        if (g.n_elements < 1)
            throw ValidationError("array needs at least one element");
        if (!(g.spacing > 0.0))
            throw ValidationError("array spacing must be positive");
    }

    PathParam to_path(const Eigenray &ray)
    {
        return {ray.gain, std::sin(ray.departure_angle), -std::sin(ray.arrival_angle)};
    }

    std::vector<PathParam> to_paths(std::span<const Eigenray> rays)
    {
        std::vector<PathParam> out;
        out.reserve(rays.size());
        for (const auto &r : rays)
            out.push_back(to_path(r));
        return out;
    }

    CVector steering_vector(const ArrayGeometry &g, double psi)
    {
        const auto n = static_cast<Eigen::Index>(g.n_elements);
        CVector e(n);
        const double scale = 1.0 / std::sqrt(static_cast<double>(n));
        for (Eigen::Index t = 0; t < n; ++t)
            e(t) = std::polar(scale, -2.0 * std::numbers::pi * static_cast<double>(t) * g.spacing * psi);
        return e;
    }

    CMatrix assemble_direct(std::span<const PathParam> paths, const ArrayGeometry &tx, const ArrayGeometry &rx)
    {
        CMatrix H = CMatrix::Zero(static_cast<Eigen::Index>(rx.n_elements), static_cast<Eigen::Index>(tx.n_elements));
        for (const auto &p : paths)
            H += p.gain * steering_vector(rx, p.aoa) * steering_vector(tx, p.aod).adjoint();
        return H;
    }

    CMatrix assemble_tx_aris(std::span<const PathParam> paths, const ArrayGeometry &tx, const ArrayGeometry &aris)
    {
        const auto na = aris.n_elements;
        CMatrix H1 = CMatrix::Zero(static_cast<Eigen::Index>(na * na), static_cast<Eigen::Index>(tx.n_elements));
        for (const auto &p : paths)
            H1 += p.gain * kron_ones(steering_vector(aris, p.aoa), na) * steering_vector(tx, p.aod).adjoint();
        return H1;
    }

    CMatrix assemble_aris_rx(std::span<const PathParam> paths, const ArrayGeometry &aris, const ArrayGeometry &rx)
    {
        const auto na = aris.n_elements;
        CMatrix H2 = CMatrix::Zero(static_cast<Eigen::Index>(rx.n_elements), static_cast<Eigen::Index>(na * na));
        for (const auto &p : paths)
            H2 += p.gain * steering_vector(rx, p.aoa) * kron_ones(steering_vector(aris, p.aod), na).adjoint();
        return H2;
    }

    std::vector<std::size_t> resolvable_subset(std::span<const double> angles, double aperture)
    {
        if (!(aperture > 0.0))
            throw InvalidArgument("aperture must be positive");
        std::vector<std::size_t> order(angles.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b)
                         { return angles[a] < angles[b]; });
        const double res = 1.0 / aperture;
        std::vector<std::size_t> pick;
        for (std::size_t i : order)
            if (pick.empty() || angles[i] - angles[pick.back()] >= res - sep_slack)
                pick.push_back(i);
        return pick;
    }

    std::size_t resolvable_count(std::span<const double> angles, double aperture)
    {
        return resolvable_subset(angles, aperture).size();
    }

    std::size_t channel_dof(std::span<const PathParam> paths, const ArrayGeometry &tx, const ArrayGeometry &rx)
    {
        if (paths.empty())
            return 0;
        std::vector<double> aod, aoa;
        for (const auto &p : paths)
        {
            aod.push_back(p.aod);
            aoa.push_back(p.aoa);
        }
        return std::min(resolvable_count(aod, tx.aperture()), resolvable_count(aoa, rx.aperture()));
    }

    CMatrix effective_channel(const ChannelTriple &t, const CVector &phi)
    {
        if (t.H2.rows() != t.H.rows() || t.H1.cols() != t.H.cols() || t.H2.cols() != t.H1.rows() ||
            phi.size() != t.H1.rows())
            throw DimensionMismatch("channel and coefficient shapes are inconsistent");
        return t.H + t.H2 * phi.asDiagonal() * t.H1;
    }

    std::size_t numerical_rank(const CMatrix &m, double rel_tol)
    {
        if (m.size() == 0)
            return 0;
        const Eigen::VectorXd s = Eigen::JacobiSVD<CMatrix>(m).singularValues();
        if (s.size() == 0 || s(0) == 0.0)
            return 0;
        return static_cast<std::size_t>((s.array() > rel_tol * s(0)).count());
    }
}
