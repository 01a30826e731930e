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

#ifndef LIGHTPOINT_ENV_HPP
#define LIGHTPOINT_ENV_HPP

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

namespace lightpoint
{
    // Deep-water profile with minimum c_s at the axis depth z0.
    struct Munk
    {
        double c_s = 1500.0;   // Reference speed at z0 [m/s]
        double epsilon = 7e-3; // Perturbation coefficient
        double z0 = 1000.0;    // Axis depth [m]
        double zl = 1000.0;    // Scale depth [m]
        bool operator==(const Munk &) const = default;
    };

    // c(z) = c_s (1 - a z)
    struct LinearGradient
    {
        double c_s = 1500.0; // Surface speed [m/s]
        double a = 0.0;      // Relative gradient [1/m]
        bool operator==(const LinearGradient &) const = default;
    };

    struct SpeedSample
    {
        double depth; // [m]
        double speed; // [m/s]
        bool operator==(const SpeedSample &) const = default;
    };

    // Piecewise-linear profile through strictly increasing depth samples.
    struct Tabulated
    {
        std::vector<SpeedSample> samples;
        bool operator==(const Tabulated &) const = default;
    };

    using SoundSpeedProfile = std::variant<Munk, LinearGradient, Tabulated>;

    // Throws ValidationError if the profile breaks its invariants.
    void validate(const SoundSpeedProfile &profile);

    struct Environment
    {
        double depth_H = 100.0;             // Water depth [m]
        double surface_loss_db = 0.0;       // Loss per surface bounce [dB]
        double bottom_loss_db = 0.0;        // Loss per bottom bounce [dB]
        double absorption_db_per_km = 0.0;  // Volume absorption [dB/km]
        SoundSpeedProfile profile = LinearGradient{};
        bool operator==(const Environment &) const = default;
    };

    void validate(const Environment &env);

    struct Layer
    {
        double c; // Layer speed [m/s]
        double h; // Thickness [m]
    };

    class LayeredMedium
    {
    public:
        LayeredMedium(std::vector<Layer> layers);

        const std::vector<Layer> &layers() const { return layers_; }
        std::size_t size() const { return layers_.size(); }
        double total_depth() const { return top_.back(); }
        double top(std::size_t m) const { return top_[m]; }
        double bottom(std::size_t m) const { return top_[m + 1]; }
        double speed(std::size_t m) const { return layers_[m].c; }

        // Index of the layer containing z; boundaries belong to the deeper layer
        // except at the bottom of the column.
        std::size_t layer_at(double z) const;

        // Speed of the layer containing z.
        double speed_at(double z) const { return layers_[layer_at(z)].c; }

        bool is_constant() const;

    private:
        std::vector<Layer> layers_;
        std::vector<double> top_; // size() + 1 interface depths
    };

    double sound_speed(const SoundSpeedProfile &profile, double z);

    LayeredMedium discretize(const SoundSpeedProfile &profile, double depth_H, std::size_t M);

    // Grazing angle below which rays launched at speed c0 never reach speed c_s.
    double critical_grazing_angle(double c0, double c_s);
}

#endif
