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

#ifndef LIGHTPOINT_DOFMAP_HPP
#define LIGHTPOINT_DOFMAP_HPP

#include "lightpoint/channel.hpp"
#include "lightpoint/env.hpp"
#include "lightpoint/raytrace.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace lightpoint
{
    // Cell-centred search grid over candidate aRIS positions.
    struct GridSpec
    {
        double r_min = 0.0, r_max = 1.0; // [m]
        double z_min = 0.0, z_max = 1.0; // [m]
        std::size_t n_r = 1, n_z = 1;
        Point point(std::size_t i, std::size_t j) const;
        bool operator==(const GridSpec &) const = default;
    };

    void validate(const GridSpec &g);

    // Everything the map needs to know about the link.
    struct Deployment
    {
        Environment env;
        LayeredMedium medium{{{1500.0, 1.0}}};
        Point tx, rx;
        ArrayGeometry tx_geom, rx_geom, aris_geom;
        TraceOptions trace;
    };

    struct DoFCell
    {
        Point p;
        std::size_t r1 = 0, r2 = 0, sup_dof = 0;
        std::optional<double> tl_metric_db;
    };

    struct DoFMapResult
    {
        GridSpec grid;
        std::vector<DoFCell> cells; // index i * n_z + j
        std::size_t d_max = 0;
        std::vector<Point> light_points;
        std::optional<Point> optimum;
        const DoFCell &cell(std::size_t i, std::size_t j) const { return cells[i * grid.n_z + j]; }
    };

    // Angles and losses of one hop, with the apertures that resolve each end.
    struct HopPaths
    {
        std::vector<double> tl_db;
        std::vector<double> aod; // directional sines at the launching array
        std::vector<double> aoa; // directional sines at the receiving array
        double aperture_dep = 1.0;
        double aperture_arr = 1.0;
        std::size_t size() const { return tl_db.size(); }
    };

    HopPaths make_hop(std::span<const Eigenray> rays, double aperture_dep, double aperture_arr);

    // min(resolvable departures, resolvable arrivals)
    std::size_t hop_rank(const HopPaths &hop);

    struct TlMetric
    {
        double tl_db = 0.0;
        std::vector<std::size_t> side1; // chosen path indices, ascending
        std::vector<std::size_t> side2;
    };

    // Minimum summed loss over size-d subsets whose members are pairwise
    // resolvable at both ends of their hop. Throws InsufficientPaths.
    TlMetric tl_metric(const HopPaths &side1, const HopPaths &side2, std::size_t d);

    // Same with every path treated as mutually resolvable.
    double tl_metric(std::span<const double> side1_tl, std::span<const double> side2_tl, std::size_t d);

    // Eigenrays of both hops through p; an empty list means no eigenray.
    struct PointPaths
    {
        std::vector<Eigenray> tx_to_p;
        std::vector<Eigenray> p_to_rx;
    };

    // Evaluates one candidate point. The p -> Rx hop is traced from Rx and
    // reversed, which is exact in a range-independent medium.
    class DoFEvaluator
    {
    public:
        // Fans reach |rx - tx| from each end.
        explicit DoFEvaluator(const Deployment &dep);
        // Fans reach the given horizontal distances from Tx and Rx.
        DoFEvaluator(const Deployment &dep, double reach_tx, double reach_rx);
        PointPaths paths(Point p) const;
        DoFCell evaluate(Point p) const;
        DoFCell evaluate(const PointPaths &paths, Point p) const;
        const Deployment &deployment() const { return dep_; }

    private:
        Deployment dep_;
        RayFan from_tx_;
        RayFan from_rx_;
    };

    DoFCell evaluate_point(const Deployment &dep, Point p);

    DoFMapResult build_dof_map(const Deployment &dep, const GridSpec &grid);

    // Light point with the smallest TL metric; ties go to smaller r, then z.
    Point select_light_point(const DoFMapResult &map);
}

#endif
