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

#ifndef LIGHTPOINT_CONFIG_HPP
#define LIGHTPOINT_CONFIG_HPP

#include "lightpoint/pipeline.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace lightpoint
{
    // Everything a scenario file carries beyond the Scenario itself.
    struct ScenarioFile
    {
        Scenario scenario;
        std::vector<double> beam_targets;      // beamform subcommand only
        std::vector<double> beam_capture_aoas; // beamform subcommand only
        std::optional<Point> tracking_center;  // track subcommand only
        std::optional<std::uint64_t> seed;
        bool operator==(const ScenarioFile &) const = default;
    };

    // Throws ParseError (with line or key) or ValidationError.
    ScenarioFile parse_config_text(const std::string &text, const std::string &origin = "<string>");
    ScenarioFile parse_config(const std::filesystem::path &path);

    std::string serialize(const ScenarioFile &file);
}

#endif
