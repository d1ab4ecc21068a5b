/*
   Copyright 2026 The bchatlas Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ATLAS_TABLES_HPP
#define ATLAS_TABLES_HPP

/**
 * @file tables.hpp
 * @brief Deterministic CSV/JSON tables behind the atlas subcommands.
 *
 * A table is rendered into a string first and written in one go, so the
 * bytes never depend on the worker count. CSV has a header row and LF line
 * endings; JSON is {"kind", "params", "rows"} with sorted keys.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "atlas/closed_form.hpp"
#include "atlas/coset_core.hpp"
#include "json.hpp"

namespace atlas {

enum class TableKind { Leaders, Deltas, Dims, Partition, Genpoly };
enum class TableFormat { Csv, Json };
enum class DimsMethod { Closed, Brute, Both };

std::string_view to_string(TableKind kind) noexcept;
std::string_view to_string(DimsMethod method) noexcept;

struct TableParams {
    unsigned m = 0;
    std::optional<Residue> lo;
    std::optional<Residue> hi;
    Residue delta = 0;
    int b = 1;
    DimsMethod method = DimsMethod::Both;
    Scheme scheme = Scheme::IA1;
    unsigned t = 0;
    unsigned threads = 1;
};

/// Rows are ordered JSON objects keyed by column name.
struct Table {
    TableKind kind = TableKind::Leaders;
    std::vector<std::string> columns;
    nlohmann::json params = nlohmann::json::object();
    std::vector<nlohmann::json> rows;
};

/// Throws UsageError for bad parameters.
Table build_table(TableKind kind, const TableParams& params);

std::string render(const Table& table, TableFormat format);

}  // namespace atlas

#endif  // ATLAS_TABLES_HPP
