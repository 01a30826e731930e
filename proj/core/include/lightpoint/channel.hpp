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

#ifndef LIGHTPOINT_CHANNEL_HPP
#define LIGHTPOINT_CHANNEL_HPP

#include "lightpoint/raytrace.hpp"

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace lightpoint
{
    using cdouble = std::complex<double>;
    using CMatrix = Eigen::MatrixXcd;
    using CVector = Eigen::VectorXcd;

    // Uniform linear array; spacing and aperture in carrier wavelengths.
    struct ArrayGeometry
    {
        std::size_t n_elements = 1;
        double spacing = 0.5;
        double aperture() const { return static_cast<double>(n_elements) * spacing; }
        bool operator==(const ArrayGeometry &) const = default;
    };

    void validate(const ArrayGeometry &g);

    // Angles are directional sines in [-1, 1].
    struct PathParam
    {
        cdouble gain;
        double aod = 0.0;
        double aoa = 0.0;
    };

    struct ChannelTriple
    {
        CMatrix H;  // Nr x Nt
        CMatrix H1; // Na^2 x Nt
        CMatrix H2; // Nr x Na^2
        std::vector<PathParam> paths_direct;
        std::vector<PathParam> paths_tx_aris;
        std::vector<PathParam> paths_aris_rx;
    };

    // Departure sine from the launch angle, arrival sine pointing back toward
    // the source, both with the downward-positive convention.
    PathParam to_path(const Eigenray &ray);
    std::vector<PathParam> to_paths(std::span<const Eigenray> rays);

    CVector steering_vector(const ArrayGeometry &g, double psi);

    CMatrix assemble_direct(std::span<const PathParam> paths, const ArrayGeometry &tx, const ArrayGeometry &rx);

    // Tx -> aRIS channel: sum of gain (e_a(aoa) kron 1) e_t(aod)^H.
    CMatrix assemble_tx_aris(std::span<const PathParam> paths, const ArrayGeometry &tx,
                             const ArrayGeometry &aris);

    // aRIS -> Rx channel: sum of gain e_r(aoa) (e_a(aod) kron 1)^H.
    CMatrix assemble_aris_rx(std::span<const PathParam> paths, const ArrayGeometry &aris,
                             const ArrayGeometry &rx);

    // Indices of a maximum subset whose angles are pairwise at least
    // 1/aperture apart, in ascending angle order.
    std::vector<std::size_t> resolvable_subset(std::span<const double> angles, double aperture);
    std::size_t resolvable_count(std::span<const double> angles, double aperture);

    std::size_t channel_dof(std::span<const PathParam> paths, const ArrayGeometry &tx, const ArrayGeometry &rx);

    // H + H2 diag(phi) H1.
    CMatrix effective_channel(const ChannelTriple &triple, const CVector &phi_diag);

    std::size_t numerical_rank(const CMatrix &m, double rel_tol = 1e-6);
}

#endif
