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

#ifndef LIGHTPOINT_CLI_HPP
#define LIGHTPOINT_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace lightpoint
{
    struct RunManifest
    {
        std::string subcommand;
        std::filesystem::path config_path;
        std::filesystem::path out_dir = ".";
        std::optional<std::uint64_t> seed; // falls back to tracking.seed, then 1
    };

    std::string_view version();

    // trace, dofmap, deploy, beamform, track, capacity, joint
    std::span<const std::string_view> subcommands();

    std::string usage();

    // 0 on success, 1 on a library error (its name goes to err), 2 for an
    // unknown subcommand.
    int dispatch(const RunManifest &manifest, std::ostream &log, std::ostream &err);
}

#endif
