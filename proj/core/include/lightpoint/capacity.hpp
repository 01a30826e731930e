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

#ifndef LIGHTPOINT_CAPACITY_HPP
#define LIGHTPOINT_CAPACITY_HPP

#include "lightpoint/channel.hpp"

#include <span>
#include <vector>

namespace lightpoint
{
    struct CapacityQuery
    {
        CMatrix h_eff;
        double rho = 1.0;   // linear SNR
        double gamma = 1.0; // tracking gain in (0, 1]
    };

    // log2 det(I + rho gamma / N_t H H^H) in bits/s/Hz, from singular values.
    double capacity(const CapacityQuery &q);

    struct CapacityRow
    {
        double rho_db = 0.0;
        double c_no_aris = 0.0;
        double c_with_aris = 0.0;
        double gain_ratio() const { return c_no_aris > 0.0 ? (c_with_aris - c_no_aris) / c_no_aris : 0.0; }
    };

    // Baseline uses H with gamma = 1; the aRIS column uses h_eff with gamma.
    std::vector<CapacityRow> capacity_sweep(const CMatrix &h, const CMatrix &h_eff, double gamma,
                                            std::span<const double> rho_db);

    // Delta C / Delta log2(rho) between two SNRs given in dB.
    double high_snr_slope(const CMatrix &m, double gamma, double rho_lo_db, double rho_hi_db);

    double db_to_linear(double db);
}

#endif
