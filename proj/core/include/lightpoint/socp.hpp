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

#ifndef LIGHTPOINT_SOCP_HPP
#define LIGHTPOINT_SOCP_HPP

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace lightpoint
{
    // ||A x + b|| <= c^T x + d. An A with zero rows is the linear
    // constraint c^T x + d >= 0.
    struct SocCone
    {
        Eigen::MatrixXd A;
        Eigen::VectorXd b;
        Eigen::VectorXd c;
        double d = 0.0;
        std::string family;
    };

    struct SocpProblem
    {
        Eigen::VectorXd objective; // minimize objective^T x
        std::vector<SocCone> cones;
    };

    struct SocpOptions
    {
        double gap_tol = 1e-9;   // stop when the barrier duality gap drops below this
        double newton_tol = 1e-10;
        int max_newton = 100;     // per centering step
        double mu = 20.0;
    };

    struct SocpResult
    {
        bool feasible = false;
        Eigen::VectorXd x;
        double objective = 0.0;
        double infeasibility = 0.0;          // optimal phase-I slack, > 0 when infeasible
        std::vector<std::string> violated;   // families binding at the phase-I optimum
        int newton_steps = 0;
    };

    // Slack of a cone at x: c^T x + d - ||A x + b||, negative when violated.
    double cone_margin(const SocCone &cone, const Eigen::VectorXd &x);

    // Barrier interior-point method with a slack-variable phase I.
    SocpResult solve_socp(const SocpProblem &problem, const SocpOptions &opts = {});
}

#endif
