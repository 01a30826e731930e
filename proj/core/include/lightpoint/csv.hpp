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

#ifndef LIGHTPOINT_CSV_HPP
#define LIGHTPOINT_CSV_HPP

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace lightpoint
{
    // Written as '#' comment lines ahead of the column header.
    struct CsvProvenance
    {
        std::string version;
        std::string config_hash;
        std::uint64_t seed = 0;
        std::string subcommand;
    };

    struct CsvTable
    {
        std::vector<std::string> columns;
        std::vector<std::vector<std::string>> rows;

        void add(std::vector<std::string> row);
    };

    // 12 significant digits, C locale.
    std::string fmt(double v);
    std::string fmt(std::size_t v);

    // 64-bit FNV-1a as 16 hex digits.
    std::string fnv1a_hex(std::string_view bytes);

    void write_csv(std::ostream &out, const CsvProvenance &prov, const CsvTable &table);
    void write_csv(const std::filesystem::path &path, const CsvProvenance &prov, const CsvTable &table);
}

#endif
