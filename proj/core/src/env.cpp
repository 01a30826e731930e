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

#include "lightpoint/env.hpp"
#include "lightpoint/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lightpoint
{
    namespace
    {
        template <class... Ts>
        struct overloaded : Ts...
        {
            using Ts::operator()...;
        };
        template <class... Ts>
        overloaded(Ts...) -> overloaded<Ts...>;
    }

    void validate(const SoundSpeedProfile &profile)
    {
        std::visit(overloaded{
                       [](const Munk &p)
                       {
                           if (!(p.c_s > 0.0))
                               throw ValidationError("profile.c_s must be positive");
                           if (!(p.epsilon > 0.0))
                               throw ValidationError("profile.epsilon must be positive");
                           if (!(p.zl > 0.0))
                               throw ValidationError("profile.zl must be positive");
                       },
                       [](const LinearGradient &p)
                       {
                           if (!(p.c_s > 0.0))
                               throw ValidationError("profile.c_s must be positive");
                       },
                       [](const Tabulated &p)
                       {
                           if (p.samples.size() < 2)
                               throw ValidationError("profile.table needs at least 2 samples");
                           for (std::size_t i = 0; i < p.samples.size(); ++i)
                           {
                               if (!(p.samples[i].speed > 0.0))
                                   throw ValidationError("profile.table speeds must be positive");
                               if (i > 0 && !(p.samples[i].depth > p.samples[i - 1].depth))
                                   throw ValidationError("profile.table depths must be strictly increasing");
                           }
                       }},
                   profile);
    }

    void validate(const Environment &env)
    {
        if (!(env.depth_H > 0.0))
            throw ValidationError("env.depth must be positive");
        if (env.surface_loss_db < 0.0 || env.bottom_loss_db < 0.0 || env.absorption_db_per_km < 0.0)
            throw ValidationError("env losses must be non-negative");
        validate(env.profile);
    }

    double sound_speed(const SoundSpeedProfile &profile, double z)
    {
        return std::visit(overloaded{
                              [z](const Munk &p)
                              {
                                  const double eta = (z - p.z0) / p.zl;
                                  return p.c_s * (1.0 + p.epsilon * (eta + std::exp(-eta) - 1.0));
                              },
                              [z](const LinearGradient &p)
                              { return p.c_s * (1.0 - p.a * z); },
                              [z](const Tabulated &p)
                              {
                                  const auto &s = p.samples;
                                  if (s.empty() || z < s.front().depth || z > s.back().depth)
                                      throw DepthOutOfRange("depth " + std::to_string(z) + " m outside tabulated profile");
                                  auto it = std::upper_bound(s.begin(), s.end(), z,
                                                             [](double v, const SpeedSample &x)
                                                             { return v < x.depth; });
                                  if (it == s.end())
                                      return s.back().speed;
                                  const auto &hi = *it;
                                  const auto &lo = *(it - 1);
                                  const double w = (z - lo.depth) / (hi.depth - lo.depth);
                                  return lo.speed + w * (hi.speed - lo.speed);
                              }},
                          profile);
    }

    LayeredMedium::LayeredMedium(std::vector<Layer> layers) : layers_(std::move(layers))
    {
        if (layers_.empty())
            throw InvalidLayerCount("medium needs at least one layer");
        top_.reserve(layers_.size() + 1);
        top_.push_back(0.0);
        for (const auto &l : layers_)
        {
            if (!(l.c > 0.0) || !(l.h > 0.0))
                throw ValidationError("layer speed and thickness must be positive");
            top_.push_back(top_.back() + l.h);
        }
    }

    std::size_t LayeredMedium::layer_at(double z) const
    {
        auto it = std::upper_bound(top_.begin() + 1, top_.end() - 1, z);
        return static_cast<std::size_t>(it - (top_.begin() + 1));
    }

    bool LayeredMedium::is_constant() const
    {
        return std::all_of(layers_.begin(), layers_.end(),
                           [&](const Layer &l)
                           { return l.c == layers_.front().c; });
    }

    LayeredMedium discretize(const SoundSpeedProfile &profile, double depth_H, std::size_t M)
    {
        if (M == 0)
            throw InvalidLayerCount("M must be at least 1");
        if (!(depth_H > 0.0))
            throw ValidationError("depth must be positive");
        const double h = depth_H / static_cast<double>(M);
        std::vector<Layer> layers(M);
        for (std::size_t m = 0; m < M; ++m)
            layers[m] = {sound_speed(profile, (static_cast<double>(m) + 0.5) * h), h};
        return LayeredMedium(std::move(layers));
    }

    double critical_grazing_angle(double c0, double c_s)
    {
        if (!(c0 > 0.0) || !(c_s > 0.0))
            throw InvalidArgument("speeds must be positive");
        if (c0 > c_s)
            throw NoCriticalAngle("source speed exceeds boundary speed");
        return std::acos(c0 / c_s);
    }
}
