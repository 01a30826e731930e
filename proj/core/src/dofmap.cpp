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

#include "lightpoint/dofmap.hpp"
#include "lightpoint/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace lightpoint
{
    namespace
    {
        constexpr double sep_slack = 1e-12;

        bool separated(double a, double b, double aperture)
        {
            return std::abs(a - b) >= 1.0 / aperture - sep_slack;
        }

        struct SubsetPick
        {
            double sum = std::numeric_limits<double>::infinity();
            std::vector<std::size_t> idx;
        };

        void enumerate(const HopPaths &hop, std::size_t d, std::size_t start, std::vector<std::size_t> &cur,
                       double sum, SubsetPick &best)
        {
            if (cur.size() == d)
            {
                if (sum < best.sum)
                {
                    best.sum = sum;
                    best.idx = cur;
                }
                return;
            }
            for (std::size_t i = start; i + (d - cur.size()) <= hop.size(); ++i)
            {
                bool ok = true;
                for (std::size_t j : cur)
                    if (!separated(hop.aod[i], hop.aod[j], hop.aperture_dep) ||
                        !separated(hop.aoa[i], hop.aoa[j], hop.aperture_arr))
                    {
                        ok = false;
                        break;
                    }
                if (!ok)
                    continue;
                cur.push_back(i);
                enumerate(hop, d, i + 1, cur, sum + hop.tl_db[i], best);
                cur.pop_back();
            }
        }

        SubsetPick best_subset(const HopPaths &hop, std::size_t d, const char *side)
        {
            if (hop.aod.size() != hop.size() || hop.aoa.size() != hop.size())
                throw DimensionMismatch("hop path lists have different lengths");
            SubsetPick best;
            std::vector<std::size_t> cur;
            enumerate(hop, d, 0, cur, 0.0, best);
            if (best.idx.size() != d)
                throw InsufficientPaths(std::string(side) + " has fewer than " + std::to_string(d) +
                                        " mutually resolvable paths");
            return best;
        }

        double far_extent(double r0, const GridSpec &g)
        {
            return std::max(std::abs(g.r_min - r0), std::abs(g.r_max - r0));
        }
    }

    Point GridSpec::point(std::size_t i, std::size_t j) const
    {
        const double dr = (r_max - r_min) / static_cast<double>(n_r);
        const double dz = (z_max - z_min) / static_cast<double>(n_z);
        return {r_min + (static_cast<double>(i) + 0.5) * dr, z_min + (static_cast<double>(j) + 0.5) * dz};
    }

    void validate(const GridSpec &g)
    {
        if (!(g.r_min < g.r_max))
            throw ValidationError("grid: r_min must be below r_max");
        if (!(g.z_min < g.z_max))
            throw ValidationError("grid: z_min must be below z_max");
        if (g.n_r < 1 || g.n_z < 1)
            throw ValidationError("grid: counts must be at least 1");
    }

    HopPaths make_hop(std::span<const Eigenray> rays, double aperture_dep, double aperture_arr)
    {
        HopPaths hop;
        hop.aperture_dep = aperture_dep;
        hop.aperture_arr = aperture_arr;
        for (const auto &ray : rays)
        {
            const PathParam pp = to_path(ray);
            hop.tl_db.push_back(ray.tl_db);
            hop.aod.push_back(pp.aod);
            hop.aoa.push_back(pp.aoa);
        }
        return hop;
    }

    std::size_t hop_rank(const HopPaths &hop)
    {
        return std::min(resolvable_count(hop.aod, hop.aperture_dep), resolvable_count(hop.aoa, hop.aperture_arr));
    }

    TlMetric tl_metric(const HopPaths &side1, const HopPaths &side2, std::size_t d)
    {
        if (d == 0)
            throw InvalidArgument("tl_metric needs d >= 1");
        SubsetPick a = best_subset(side1, d, "side 1");
        SubsetPick b = best_subset(side2, d, "side 2");
        return {a.sum + b.sum, std::move(a.idx), std::move(b.idx)};
    }

    double tl_metric(std::span<const double> side1_tl, std::span<const double> side2_tl, std::size_t d)
    {
        // Mutual resolvability is implied, so the d smallest losses win.
        auto smallest = [d](std::span<const double> tl, const char *side)
        {
            if (d == 0)
                throw InvalidArgument("tl_metric needs d >= 1");
            if (tl.size() < d)
                throw InsufficientPaths(std::string(side) + " has fewer than " + std::to_string(d) + " paths");
            std::vector<double> v(tl.begin(), tl.end());
            std::partial_sort(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(d), v.end());
            double s = 0.0;
            for (std::size_t i = 0; i < d; ++i)
                s += v[i];
            return s;
        };
        return smallest(side1_tl, "side 1") + smallest(side2_tl, "side 2");
    }

    namespace
    {
        TraceOptions with_reach(TraceOptions opts, double reach)
        {
            opts.max_range = std::min(opts.max_range, reach + 1.0);
            return opts;
        }
    }

    DoFEvaluator::DoFEvaluator(const Deployment &dep)
        : DoFEvaluator(dep, std::abs(dep.rx.r - dep.tx.r), std::abs(dep.rx.r - dep.tx.r))
    {
    }

    DoFEvaluator::DoFEvaluator(const Deployment &dep, double reach_tx, double reach_rx)
        : dep_(dep),
          from_tx_(dep.medium, dep.env, dep.tx, with_reach(dep.trace, reach_tx)),
          from_rx_(dep.medium, dep.env, dep.rx, with_reach(dep.trace, reach_rx))
    {
        validate(dep.env);
        validate(dep.trace);
        validate(dep.tx_geom);
        validate(dep.rx_geom);
        validate(dep.aris_geom);
    }

    PointPaths DoFEvaluator::paths(Point p) const
    {
        const double H = dep_.env.depth_H;
        if (!(p.z > 0.0 && p.z < H))
            throw InvalidArgument("candidate point must lie strictly inside the water column");
        if (p == dep_.tx || p == dep_.rx)
            throw InvalidArgument("candidate point coincides with Tx or Rx");
        PointPaths out;
        try
        {
            out.tx_to_p = from_tx_.eigenrays_to(p);
        }
        catch (const NoEigenray &)
        {
        }
        try
        {
            for (const auto &ray : from_rx_.eigenrays_to(p))
                out.p_to_rx.push_back(reversed(ray));
        }
        catch (const NoEigenray &)
        {
        }
        std::stable_sort(out.p_to_rx.begin(), out.p_to_rx.end(),
                         [](const Eigenray &a, const Eigenray &b) { return a.tl_db < b.tl_db; });
        return out;
    }

    DoFCell DoFEvaluator::evaluate(const PointPaths &pp, Point p) const
    {
        DoFCell cell;
        cell.p = p;
        if (pp.tx_to_p.empty() || pp.p_to_rx.empty())
            return cell;
        const HopPaths h1 = make_hop(pp.tx_to_p, dep_.tx_geom.aperture(), dep_.aris_geom.aperture());
        const HopPaths h2 = make_hop(pp.p_to_rx, dep_.aris_geom.aperture(), dep_.rx_geom.aperture());
        cell.r1 = hop_rank(h1);
        cell.r2 = hop_rank(h2);
        cell.sup_dof = std::min(cell.r1, cell.r2);
        if (cell.sup_dof >= 1)
        {
            try
            {
                cell.tl_metric_db = tl_metric(h1, h2, cell.sup_dof).tl_db;
            }
            catch (const InsufficientPaths &)
            {
            }
        }
        return cell;
    }

    DoFCell DoFEvaluator::evaluate(Point p) const
    {
        // Candidates at the exact range of an end have no defined hop.
        if (p.r == dep_.tx.r || p.r == dep_.rx.r)
            return DoFCell{p, 0, 0, 0, std::nullopt};
        return evaluate(paths(p), p);
    }

    DoFCell evaluate_point(const Deployment &dep, Point p)
    {
        const DoFEvaluator ev(dep, std::abs(p.r - dep.tx.r), std::abs(p.r - dep.rx.r));
        return ev.evaluate(p);
    }

    DoFMapResult build_dof_map(const Deployment &dep, const GridSpec &grid)
    {
        validate(grid);
        if (grid.z_min < 0.0 || grid.z_max > dep.env.depth_H)
            throw ValidationError("grid: depth range must lie within the water column");
        const DoFEvaluator ev(dep, far_extent(dep.tx.r, grid), far_extent(dep.rx.r, grid));

        DoFMapResult out;
        out.grid = grid;
        out.cells.resize(grid.n_r * grid.n_z);
        for (std::size_t i = 0; i < grid.n_r; ++i)
            for (std::size_t j = 0; j < grid.n_z; ++j)
                out.cells[i * grid.n_z + j] = ev.evaluate(grid.point(i, j));

        for (const auto &c : out.cells)
            out.d_max = std::max(out.d_max, c.sup_dof);
        if (out.d_max == 0)
            throw EmptyMap("no grid cell supports a path on both hops");
        for (const auto &c : out.cells)
            if (c.sup_dof == out.d_max)
                out.light_points.push_back(c.p);
        out.optimum = select_light_point(out);
        return out;
    }

    Point select_light_point(const DoFMapResult &map)
    {
        const DoFCell *best = nullptr;
        for (const auto &c : map.cells)
        {
            if (c.sup_dof != map.d_max || map.d_max == 0 || !c.tl_metric_db)
                continue;
            if (!best || *c.tl_metric_db < *best->tl_metric_db ||
                (*c.tl_metric_db == *best->tl_metric_db &&
                 (c.p.r < best->p.r || (c.p.r == best->p.r && c.p.z < best->p.z))))
                best = &c;
        }
        if (!best)
            throw EmptyMap("no light point carries a transmission-loss metric");
        return best->p;
    }
}
