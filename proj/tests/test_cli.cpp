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
#include "lightpoint/config.hpp"
#include "lightpoint/csv.hpp"
#include "lightpoint/errors.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace lightpoint;
namespace fs = std::filesystem;

namespace
{
    std::string slurp(const fs::path &p)
    {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    fs::path scratch(const std::string &name)
    {
        const fs::path p = fs::temp_directory_path() / ("lightpoint_test_" + name);
        fs::remove_all(p);
        fs::create_directories(p);
        return p;
    }

    constexpr const char *kSmallJoint = R"(env:
  depth_H: 100
  profile: {type: linear, c_s: 1500, a: 0}
  bottom_loss_db: 2
  tx_pos: [0, 50]
  rx_pos: [200, 50]
trace: {layers: 100}
grid: {r_min: 0, r_max: 200, z_min: 0, z_max: 100, n_r: 6, n_z: 4}
tracking: {seed: 3}
)";
}

TEST(ParseConfig, MinimalConfigGetsDefaults)
{
    const ScenarioFile f = parse_config_text("env:\n  depth_H: 100\n  tx_pos: [0, 50]\n  rx_pos: [400, 50]\n");
    const Scenario &s = f.scenario;
    EXPECT_EQ(s.tx_geom.n_elements, 4u);
    EXPECT_EQ(s.rx_geom.n_elements, 4u);
    EXPECT_DOUBLE_EQ(s.f_c, 9000.0);
    EXPECT_DOUBLE_EQ(s.beam.g_req, 0.8);
    EXPECT_DOUBLE_EQ(s.beam.eps_cross, 0.01);
    EXPECT_DOUBLE_EQ(s.beam.g_max, 1.0);
    EXPECT_DOUBLE_EQ(s.capacity.report_snr_db, 20.0);
    EXPECT_EQ(s.rx_pos, (Point{400.0, 50.0}));
    EXPECT_DOUBLE_EQ(s.grid.z_max, 100.0);
    EXPECT_FALSE(s.tracking.has_value());
}

TEST(ParseConfig, Errors)
{
    EXPECT_THROW(parse_config_text("env:\n  depth_H: -5\n"), ValidationError);
    EXPECT_THROW(parse_config_text("env:\n  depht_H: 100\n"), ParseError);
    EXPECT_THROW(parse_config_text("env:\n  depth_H: deep\n"), ParseError);
    EXPECT_THROW(parse_config_text("env: [1, 2\n"), ParseError);
    EXPECT_THROW(parse_config("/nonexistent/lightpoint.yaml"), ParseError);
    try
    {
        parse_config_text("env:\n  depth_H: 100\n  profile: {type: wobbly}\n", "cfg.yaml");
        FAIL();
    }
    catch (const ParseError &e)
    {
        EXPECT_NE(std::string(e.what()).find("cfg.yaml:3"), std::string::npos) << e.what();
    }
}

TEST(ParseConfig, RoundTrip)
{
    for (const char *name : {"shallow.yaml", "deep.yaml", "beams.yaml"})
    {
        const ScenarioFile a = parse_config(fs::path(LIGHTPOINT_CONFIG_DIR) / name);
        const ScenarioFile b = parse_config_text(serialize(a));
        EXPECT_EQ(a, b) << name;
    }
    ScenarioFile t = parse_config_text(
        "env:\n  depth_H: 50\n  profile:\n    type: tabulated\n    samples: [[0, 1500], [50, 1490]]\n");
    EXPECT_EQ(parse_config_text(serialize(t)), t);
}

TEST(Csv, HeaderAndFormatting)
{
    CsvTable t{{"a", "b"}, {}};
    t.add({fmt(0.1), fmt(std::size_t{3})});
    EXPECT_THROW(t.add({"x"}), DimensionMismatch);
    std::ostringstream out;
    write_csv(out, {"0.1.0", "abc", 9, "trace"}, t);
    EXPECT_EQ(out.str(), "# lightpoint 0.1.0\n# subcommand=trace config_hash=abc seed=9\na,b\n0.1,3\n");
    EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
    EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
}

TEST(Dispatch, UnknownSubcommandAndMissingConfig)
{
    std::ostringstream log, err;
    EXPECT_EQ(dispatch({"frobnicate", {}, ".", {}}, log, err), 2);
    EXPECT_NE(err.str().find("usage"), std::string::npos);
    err.str("");
    EXPECT_EQ(dispatch({"trace", "/nonexistent/x.yaml", scratch("missing"), {}}, log, err), 1);
    EXPECT_NE(err.str().find("ParseError"), std::string::npos);
}

TEST(Dispatch, BeamformWritesProvenance)
{
    const fs::path out = scratch("beamform");
    std::ostringstream log, err;
    ASSERT_EQ(dispatch({"beamform", fs::path(LIGHTPOINT_CONFIG_DIR) / "beams.yaml", out, 11}, log, err), 0)
        << err.str();
    for (const char *name : {"beams.csv", "constraints.csv"})
    {
        const std::string text = slurp(out / name);
        EXPECT_EQ(text.rfind("# lightpoint ", 0), 0u) << name;
        EXPECT_NE(text.find("seed=11"), std::string::npos);
        EXPECT_NE(text.find("config_hash="), std::string::npos);
    }
}

TEST(Dispatch, JointWritesAllTablesDeterministically)
{
    const fs::path dir = scratch("joint");
    const fs::path cfg = dir / "small.yaml";
    std::ofstream(cfg) << kSmallJoint;
    std::ostringstream log, err;
    ASSERT_EQ(dispatch({"joint", cfg, dir / "a", {}}, log, err), 0) << err.str();
    ASSERT_EQ(dispatch({"joint", cfg, dir / "b", {}}, log, err), 0) << err.str();
    for (const char *name : {"dofmap.csv", "lightpoint.csv", "beams.csv", "capacity.csv", "track.csv", "summary.csv"})
    {
        ASSERT_TRUE(fs::exists(dir / "a" / name)) << name;
        EXPECT_EQ(slurp(dir / "a" / name), slurp(dir / "b" / name)) << name;
    }
    EXPECT_NE(slurp(dir / "a" / "summary.csv").find("seed=3"), std::string::npos);
}

TEST(Dispatch, EverySubcommandRuns)
{
    const fs::path dir = scratch("subcommands");
    const fs::path cfg = dir / "small.yaml";
    std::ofstream(cfg) << kSmallJoint;
    for (auto sub : subcommands())
    {
        std::ostringstream log, err;
        EXPECT_EQ(dispatch({std::string(sub), cfg, dir / std::string(sub), 1}, log, err), 0)
            << sub << ": " << err.str();
    }
}

TEST(Executable, ExitCodes)
{
    const std::string exe = LIGHTPOINT_CLI_PATH;
    if (exe.empty())
        GTEST_SKIP() << "CLI not built";
    EXPECT_EQ(std::system((exe + " --version > /dev/null").c_str()), 0);
    EXPECT_EQ(WEXITSTATUS(std::system((exe + " bogus > /dev/null 2>&1").c_str())), 2);
    EXPECT_EQ(WEXITSTATUS(std::system((exe + " trace --config /nonexistent.yaml > /dev/null 2>&1").c_str())), 1);
}
