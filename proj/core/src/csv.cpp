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

#include "lightpoint/csv.hpp"
#include "lightpoint/errors.hpp"

#include <cstdio>
#include <fstream>

namespace lightpoint
{
    void CsvTable::add(std::vector<std::string> row)
    {
        if (row.size() != columns.size())
            throw DimensionMismatch("CSV row has " + std::to_string(row.size()) + " cells, expected " +
                                    std::to_string(columns.size()));
        rows.push_back(std::move(row));
    }

    std::string fmt(double v)
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", v);
        return buf;
    }

    std::string fmt(std::size_t v)
    {
        return std::to_string(v);
    }

    std::string fnv1a_hex(std::string_view bytes)
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char c : bytes)
        {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return buf;
    }

    void write_csv(std::ostream &out, const CsvProvenance &prov, const CsvTable &table)
    {
        out << "# lightpoint " << prov.version << "\n";
        out << "# subcommand=" << prov.subcommand << " config_hash=" << prov.config_hash << " seed=" << prov.seed
            << "\n";
        for (std::size_t i = 0; i < table.columns.size(); ++i)
            out << (i ? "," : "") << table.columns[i];
        out << "\n";
        for (const auto &row : table.rows)
        {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << row[i];
            out << "\n";
        }
    }

    void write_csv(const std::filesystem::path &path, const CsvProvenance &prov, const CsvTable &table)
    {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw InvalidArgument("cannot write '" + path.string() + "'");
        write_csv(out, prov, table);
    }
}
