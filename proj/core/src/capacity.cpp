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

#include "lightpoint/capacity.hpp"
#include "lightpoint/errors.hpp"

#include <Eigen/SVD>

#include <cmath>

namespace lightpoint
{
    double db_to_linear(double db)
    {
        return std::pow(10.0, db / 10.0);
    }

    double capacity(const CapacityQuery &q)
    {
        if (!(q.rho >= 0.0))
            throw InvalidArgument("rho must be nonnegative");
        if (!(q.gamma > 0.0 && q.gamma <= 1.0))
            throw InvalidArgument("gamma must lie in (0, 1]");
        if (q.h_eff.size() == 0)
            return 0.0;
        const double scale = q.rho * q.gamma / static_cast<double>(q.h_eff.cols());
        const Eigen::VectorXd sv = Eigen::JacobiSVD<CMatrix>(q.h_eff).singularValues();
        double c = 0.0;
        for (Eigen::Index i = 0; i < sv.size(); ++i)
            c += std::log2(1.0 + scale * sv(i) * sv(i));
        return c;
    }

    std::vector<CapacityRow> capacity_sweep(const CMatrix &h, const CMatrix &h_eff, double gamma,
                                            std::span<const double> rho_db)
    {
        if (h.rows() != h_eff.rows() || h.cols() != h_eff.cols())
            throw DimensionMismatch("direct and effective channels differ in shape");
        std::vector<CapacityRow> out;
        out.reserve(rho_db.size());
        for (double db : rho_db)
        {
            const double rho = db_to_linear(db);
            out.push_back({db, capacity({h, rho, 1.0}), capacity({h_eff, rho, gamma})});
        }
        return out;
    }

    double high_snr_slope(const CMatrix &m, double gamma, double rho_lo_db, double rho_hi_db)
    {
        const double lo = capacity({m, db_to_linear(rho_lo_db), gamma});
        const double hi = capacity({m, db_to_linear(rho_hi_db), gamma});
        return (hi - lo) / std::log2(db_to_linear(rho_hi_db) / db_to_linear(rho_lo_db));
    }
}
