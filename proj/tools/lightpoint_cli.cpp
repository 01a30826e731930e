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

#include "lightpoint/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

int main(int argc, char **argv)
{
    lightpoint::RunManifest manifest;
    std::string config, out = ".";
    std::uint64_t seed = 0;

    CLI::App app{"Ray tracing, aRIS deployment and beamforming for underwater acoustic MIMO links"};
    app.set_version_flag("--version", std::string(lightpoint::version()));
    app.add_option("subcommand", manifest.subcommand, "trace | dofmap | deploy | beamform | track | capacity | joint")
        ->required();
    app.add_option("--config", config, "Scenario YAML file");
    app.add_option("--out", out, "Output directory for CSV files");
    auto *seed_opt = app.add_option("--seed", seed, "Seed for random tracking starts");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    manifest.config_path = config;
    manifest.out_dir = out;
    if (seed_opt->count() > 0)
        manifest.seed = seed;
    return lightpoint::dispatch(manifest, std::cout, std::cerr);
}
