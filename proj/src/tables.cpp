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

#include "atlas/tables.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "atlas/bch_params.hpp"
#include "atlas/errors.hpp"
#include "atlas/gf2_codec.hpp"
#include "atlas/verify.hpp"

namespace atlas {

namespace {

// Wide enough for m = 24 in one call; larger spans must be windowed.
constexpr Residue kMaxLeaderSpan = Residue{1} << 25;

CodeLength parse_length(unsigned m) {
    try {
        return CodeLength(m);
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
}

void check_b(int b) {
    if (b != 0 && b != 1) throw UsageError("b must be 0 or 1");
}

void check_delta(const CodeLength& length, Residue delta) {
    if (delta < 2 || delta > length.n()) {
        throw UsageError("delta must lie in [2, " + std::to_string(length.n()) + "]");
    }
}

Table leaders_table(const TableParams& p) {
    const CodeLength length = parse_length(p.m);
    const Residue lo = p.lo.value_or(1);
    const Residue hi = p.hi.value_or(length.n() - 1);
    if (lo < 1 || hi >= length.n() || lo > hi) {
        throw UsageError("need 1 <= lo <= hi <= " + std::to_string(length.n() - 1));
    }
    if (hi - lo >= kMaxLeaderSpan) throw UsageError("leader range too wide; narrow it with --lo/--hi");

    const unsigned threads = std::max(1u, std::min<unsigned>(p.threads, 64));
    std::vector<std::vector<CosetRecord>> parts(threads);
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> workers;
    const Residue span = hi - lo + 1;
    for (unsigned w = 0; w < threads; ++w) {
        const Residue a = lo + span * w / threads, b = lo + span * (w + 1) / threads;
        if (a == b) continue;
        workers.emplace_back([&, w, a, b] {
            try {
                parts[w] = enumerate_leaders(length, a, b - 1);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    Table table;
    table.kind = TableKind::Leaders;
    table.columns = {"leader", "coset_size"};
    table.params = {{"m", p.m}, {"n", length.n()}, {"lo", lo}, {"hi", hi}};
    for (const auto& part : parts) {
        for (const auto& rec : part) table.rows.push_back({{"leader", rec.leader}, {"coset_size", rec.size}});
    }
    return table;
}

Table deltas_table(const TableParams& p) {
    const CodeLength length = parse_length(p.m);
    try {
        require_closed_form(length);
    } catch (const UnsupportedLength& e) {
        throw UsageError(e.what());
    }
    const auto ladder = delta_ladder(length);
    const bool with_oracle = length.m() <= kTableMaxExponent;

    Table table;
    table.kind = TableKind::Deltas;
    table.columns = {"i", "delta", "coset_size"};
    if (with_oracle) {
        table.columns.push_back("oracle_delta");
        table.columns.push_back("oracle_coset_size");
    }
    table.params = {{"m", p.m}, {"n", length.n()}, {"family", to_string(length.family())}, {"t", length.t()}};
    const auto oracle = with_oracle ? top_leaders(length, 5) : std::vector<CosetRecord>{};
    for (std::size_t i = 0; i < 5; ++i) {
        nlohmann::json row = {{"i", i + 1}, {"delta", ladder.deltas[i]}, {"coset_size", ladder.coset_sizes[i]}};
        if (with_oracle) {
            row["oracle_delta"] = oracle.at(i).leader;
            row["oracle_coset_size"] = oracle.at(i).size;
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

nlohmann::json spec_row(std::string_view method, const CodeSpec& spec) {
    return {{"method", method},
            {"status", "ok"},
            {"m", spec.length.m()},
            {"n", spec.length.n()},
            {"b", spec.b},
            {"delta", spec.delta},
            {"dimension", spec.dimension},
            {"defining_size", spec.defining_size},
            {"bose", spec.bose},
            {"distance_bound", spec.distance_bound}};
}

nlohmann::json failed_row(std::string_view method, std::string_view status, const CodeLength& length, Residue delta,
                          int b) {
    return {{"method", method},
            {"status", status},
            {"m", length.m()},
            {"n", length.n()},
            {"b", b},
            {"delta", delta},
            {"dimension", nullptr},
            {"defining_size", nullptr},
            {"bose", nullptr},
            {"distance_bound", nullptr}};
}

Table dims_table(const TableParams& p) {
    const CodeLength length = parse_length(p.m);
    check_b(p.b);
    check_delta(length, p.delta);

    Table table;
    table.kind = TableKind::Dims;
    table.columns = {"method", "status",    "m",    "n",   "b", "delta", "dimension", "defining_size",
                     "bose",   "distance_bound"};
    table.params = {{"m", p.m}, {"delta", p.delta}, {"b", p.b}, {"method", to_string(p.method)}};

    if (p.method != DimsMethod::Brute) {
        try {
            table.rows.push_back(spec_row("closed", dimension_closed(length, p.delta, p.b)));
        } catch (const ParityError&) {
            table.rows.push_back(failed_row("closed", "even_delta", length, p.delta, p.b));
        } catch (const OutOfTheoremRange&) {
            table.rows.push_back(failed_row("closed", "out_of_range", length, p.delta, p.b));
        } catch (const UnsupportedLength&) {
            table.rows.push_back(failed_row("closed", "unsupported", length, p.delta, p.b));
        }
    }
    if (p.method != DimsMethod::Closed) {
        table.rows.push_back(spec_row("brute", dimension_brute(length, p.delta, p.b)));
    }
    return table;
}

Table partition_table(const TableParams& p) {
    if (p.t < scheme_min_t(p.scheme) || p.t > scheme_max_t(p.scheme)) {
        throw UsageError("t for " + std::string(to_string(p.scheme)) + " must lie in [" +
                         std::to_string(scheme_min_t(p.scheme)) + ", " + std::to_string(scheme_max_t(p.scheme)) +
                         "]");
    }
    const auto partition = ia_partition(p.scheme, p.t);

    Table table;
    table.kind = TableKind::Partition;
    table.columns = {"s", "lo", "hi", "i", "lambda"};
    table.params = {{"scheme", to_string(p.scheme)}, {"t", p.t}};
    for (std::size_t s = 1; s <= partition.intervals.size(); ++s) {
        const auto& iv = partition.intervals[s - 1];
        const auto loc = interval_locate(s, p.t, p.scheme);
        table.rows.push_back({{"s", s}, {"lo", iv.lo}, {"hi", iv.hi}, {"i", loc.i}, {"lambda", loc.lambda}});
    }
    return table;
}

Table genpoly_table(const TableParams& p) {
    const CodeLength length = parse_length(p.m);
    check_b(p.b);
    check_delta(length, p.delta);
    if (2 * length.m() > kMaxFieldDegree) {
        throw UsageError("generator polynomials need 2m <= " + std::to_string(kMaxFieldDegree));
    }
    const auto field = build_field(length);
    const auto set_size = defining_size(length, p.delta, p.b);
    if (set_size >= length.n()) throw UsageError("the defining set is all of Z_n; the code is {0}");
    const auto g = generator_polynomial(field, length, p.delta, p.b);
    const auto xn1 = BinaryPolynomial::monomial(length.n()) + BinaryPolynomial::from_word(1);

    Table table;
    table.kind = TableKind::Genpoly;
    table.columns = {"m",         "n",         "b",        "delta",     "defining_size", "degree",
                     "dimension", "self_reciprocal", "divides_xn1", "modulus", "generator"};
    table.params = {{"m", p.m}, {"delta", p.delta}, {"b", p.b}};
    table.rows.push_back({{"m", p.m},
                          {"n", length.n()},
                          {"b", p.b},
                          {"delta", p.delta},
                          {"defining_size", set_size},
                          {"degree", g.degree()},
                          {"dimension", static_cast<std::int64_t>(length.n()) - g.degree()},
                          {"self_reciprocal", is_self_reciprocal(g)},
                          {"divides_xn1", (xn1 % g).is_zero()},
                          {"modulus", field.modulus_polynomial().to_hex()},
                          {"generator", g.to_hex()}});
    return table;
}

std::string csv_cell(const nlohmann::json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

}  // namespace

std::string_view to_string(TableKind kind) noexcept {
    switch (kind) {
        case TableKind::Leaders: return "leaders";
        case TableKind::Deltas: return "deltas";
        case TableKind::Dims: return "dims";
        case TableKind::Partition: return "partition";
        case TableKind::Genpoly: return "genpoly";
    }
    return "unknown";
}

std::string_view to_string(DimsMethod method) noexcept {
    switch (method) {
        case DimsMethod::Closed: return "closed";
        case DimsMethod::Brute: return "brute";
        case DimsMethod::Both: return "both";
    }
    return "unknown";
}

Table build_table(TableKind kind, const TableParams& params) {
    switch (kind) {
        case TableKind::Leaders: return leaders_table(params);
        case TableKind::Deltas: return deltas_table(params);
        case TableKind::Dims: return dims_table(params);
        case TableKind::Partition: return partition_table(params);
        case TableKind::Genpoly: return genpoly_table(params);
    }
    throw UsageError("unknown table kind");
}

std::string render(const Table& table, TableFormat format) {
    if (format == TableFormat::Json) {
        nlohmann::json doc = {{"kind", to_string(table.kind)}, {"params", table.params}};
        doc["rows"] = nlohmann::json::array();
        for (const auto& row : table.rows) doc["rows"].push_back(row);
        return doc.dump(2) + "\n";
    }
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out += ',';
        out += table.columns[c];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            if (c) out += ',';
            out += csv_cell(row.at(table.columns[c]));
        }
        out += '\n';
    }
    return out;
}

}  // namespace atlas
