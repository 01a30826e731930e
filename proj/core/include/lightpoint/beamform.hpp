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

#ifndef LIGHTPOINT_BEAMFORM_HPP
#define LIGHTPOINT_BEAMFORM_HPP

#include "lightpoint/channel.hpp"

#include <span>
#include <string>
#include <vector>

namespace lightpoint
{
    // Amplifier gains of one ASTAR element.
    struct AstarGains
    {
        cdouble g_t;
        cdouble g_r;
    };

    struct AstarCoefficients
    {
        cdouble s; // reflected
        cdouble t; // transmitted
    };

    AstarCoefficients astar_forward(const AstarGains &gains);
    AstarGains astar_inverse(const AstarCoefficients &coeffs);

    // Element t: sum_p exp(+j 2 pi t spacing phi_p).
    CVector capture_weights(std::span<const double> incident_aoas, const ArrayGeometry &aris_side);

    // |e(psi)^H w| for every psi.
    std::vector<double> beam_pattern(const CVector &weights, const ArrayGeometry &aris_side,
                                     std::span<const double> angles);

    // Directional sines of a 1 deg grid over [-90, 90] deg, excluding the
    // band |psi - target| < guard around every target.
    std::vector<double> sidelobe_grid(std::span<const double> targets, double guard);

    // Default guard band: 1/A_a.
    std::vector<double> sidelobe_grid(std::span<const double> targets, const ArrayGeometry &aris_side);

    struct MultiBeamProblem
    {
        ArrayGeometry aris_side;
        std::vector<double> target_aods;
        std::vector<double> g_req; // one per target, or a single value for all
        double eps_cross = 0.01;
        double g_max = 1.0;
        std::vector<double> sidelobe_grid; // empty: default grid
        CVector capture;                   // empty: all ones
    };

    void validate(const MultiBeamProblem &problem);

    struct BeamSolution
    {
        std::vector<CVector> t_g_per_beam;
        CVector t_total; // capture times the sum of the generation beams
        double beta = 0.0;
        bool feasible = false;
        std::string certificate; // violated constraint families when infeasible
    };

    // Solves the sidelobe-minimizing problem; reports infeasibility in the result.
    BeamSolution try_synthesize_multibeam(const MultiBeamProblem &problem);

    // Same, but throws Infeasible naming the violated constraint families.
    BeamSolution synthesize_multibeam(const MultiBeamProblem &problem);

    // Conjugate steering beams scaled to meet the main-lobe floor.
    BeamSolution steering_baseline(const MultiBeamProblem &problem);

    struct ConstraintCheck
    {
        std::string constraint;
        double bound = 0.0;
        double achieved = 0.0;
        double margin = 0.0; // positive when satisfied
    };

    // Worst case of each constraint family on the given sidelobe grid.
    std::vector<ConstraintCheck> check_constraints(const MultiBeamProblem &problem, const BeamSolution &sol,
                                                   std::span<const double> grid, double beta);

    // diag(T kron 1_{n_a}).
    CVector compose_phi(const CVector &t_total, std::size_t n_a);
}

#endif
