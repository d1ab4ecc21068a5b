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

// atlas: command-line front end for the coset, dimension and codec tables.
//
// Exit codes: 0 ok, 1 verification mismatch, 2 usage, 3 I/O.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "atlas/tables.hpp"
#include "atlas/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct Common {
    std::string format = "csv";
    std::string out;
    unsigned threads = 1;
};

void add_common(CLI::App* sub, Common& common) {
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", common.out, "Write to PATH instead of standard output");
    sub->add_option("--threads", common.threads, "Worker threads (default: ATLAS_THREADS or 1)")
        ->check(CLI::Range(1u, 1024u));
}

int write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text << std::flush;
        return std::cout ? kExitOk : kExitIo;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        std::cerr << "atlas: cannot open '" << path << "' for writing\n";
        return kExitIo;
    }
    file << text;
    file.close();
    if (!file) {
        std::cerr << "atlas: failed writing '" << path << "'\n";
        return kExitIo;
    }
    return kExitOk;
}

std::string render_report(const atlas::VerificationReport& report, const std::string& format) {
    if (format == "json") return atlas::to_json(report).dump(2) + "\n";
    std::string out = "theorem_id,m,status,cases_checked,mismatches,sampled,seed,elapsed_ms\n";
    out += report.theorem_id + ',' + std::to_string(report.m) + ',' + (report.passed() ? "PASS" : "FAIL") + ',' +
           std::to_string(report.cases_checked) + ',' + std::to_string(report.mismatches.size()) + ',' +
           (report.sampled ? "true" : "false") + ',' + std::to_string(report.seed) + ',' +
           std::to_string(report.elapsed_ms) + '\n';
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coset leaders, dimensions and generator polynomials of binary BCH codes of length 2^m+1"};
    app.require_subcommand(1);

    Common common;
    common.threads = atlas::default_thread_count();
    atlas::TableParams params;
    std::uint64_t lo = 0, hi = 0;
    bool closed = false, brute = false, both = false;
    std::string scheme = "ia1";

    auto* leaders = app.add_subcommand("leaders", "Coset leaders in [lo, hi] with coset sizes");
    leaders->add_option("--m", params.m, "Exponent m, n = 2^m+1")->required();
    auto* lo_opt = leaders->add_option("--lo", lo, "Lowest residue (default 1)");
    auto* hi_opt = leaders->add_option("--hi", hi, "Highest residue (default n-1)");
    add_common(leaders, common);

    auto* deltas = app.add_subcommand("deltas", "The five largest coset leaders from the closed form");
    deltas->add_option("--m", params.m, "Exponent m")->required();
    add_common(deltas, common);

    auto* dims = app.add_subcommand("dims", "Dimension and Bose distance of one code");
    dims->add_option("--m", params.m, "Exponent m")->required();
    dims->add_option("--delta", params.delta, "Designed distance")->required();
    dims->add_option("--b", params.b, "0 or 1")->required()->check(CLI::IsMember({0, 1}));
    auto* closed_flag = dims->add_flag("--closed", closed, "Closed form only");
    auto* brute_flag = dims->add_flag("--brute", brute, "Brute force only");
    auto* both_flag = dims->add_flag("--both", both, "Both, one row each (default)");
    closed_flag->excludes(brute_flag)->excludes(both_flag);
    brute_flag->excludes(both_flag);
    add_common(dims, common);

    auto* partition = app.add_subcommand("partition", "Interval partition with (i, lambda) locators");
    partition->add_option("--scheme", scheme, "ia1 or ia2")->required()->check(CLI::IsMember({"ia1", "ia2"}));
    partition->add_option("--t", params.t, "Family parameter t")->required();
    add_common(partition, common);

    auto* genpoly = app.add_subcommand("genpoly", "Generator polynomial of one code");
    genpoly->add_option("--m", params.m, "Exponent m (2m <= 32)")->required();
    genpoly->add_option("--delta", params.delta, "Designed distance")->required();
    genpoly->add_option("--b", params.b, "0 or 1")->required()->check(CLI::IsMember({0, 1}));
    add_common(genpoly, common);

    std::string theorem;
    std::uint64_t sample = 0;
    std::uint64_t seed = atlas::kDefaultSeed;
    auto* verify = app.add_subcommand("verify", "Sweep a closed form against brute force");
    verify->add_option("--theorem", theorem, "Check id")->required();
    verify->add_option("--m", params.m, "Exponent m")->required();
    auto* sample_opt = verify->add_option("--sample", sample, "Candidates per range (0: exhaustive)");
    verify->add_option("--seed", seed, "Sampling seed");
    add_common(verify, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    params.threads = common.threads;
    try {
        if (verify->parsed()) {
            atlas::VerifyOptions options;
            if (*sample_opt) options.sample = sample;
            options.seed = seed;
            options.threads = common.threads;
            const auto report = atlas::verify(theorem, params.m, options);
            const std::string format = verify->get_option("--format")->count() ? common.format : "json";
            const int rc = write_output(render_report(report, format), common.out);
            if (rc != kExitOk) return rc;
            return report.passed() ? kExitOk : kExitMismatch;
        }

        atlas::TableKind kind = atlas::TableKind::Leaders;
        if (leaders->parsed()) {
            if (*lo_opt) params.lo = lo;
            if (*hi_opt) params.hi = hi;
        } else if (deltas->parsed()) {
            kind = atlas::TableKind::Deltas;
        } else if (dims->parsed()) {
            kind = atlas::TableKind::Dims;
            params.method = closed  ? atlas::DimsMethod::Closed
                            : brute ? atlas::DimsMethod::Brute
                                    : atlas::DimsMethod::Both;
        } else if (partition->parsed()) {
            kind = atlas::TableKind::Partition;
            params.scheme = scheme == "ia2" ? atlas::Scheme::IA2 : atlas::Scheme::IA1;
        } else {
            kind = atlas::TableKind::Genpoly;
        }
        const auto table = atlas::build_table(kind, params);
        const int rc =
            write_output(atlas::render(table, common.format == "json" ? atlas::TableFormat::Json : atlas::TableFormat::Csv),
                         common.out);
        if (rc != kExitOk) return rc;

        // dims --both doubles as a spot check.
        if (kind == atlas::TableKind::Dims && table.rows.size() == 2 && table.rows[0]["status"] == "ok" &&
            (table.rows[0]["dimension"] != table.rows[1]["dimension"] ||
             table.rows[0]["bose"] != table.rows[1]["bose"])) {
            return kExitMismatch;
        }
        return kExitOk;
    } catch (const atlas::UsageError& e) {
        std::cerr << "atlas: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "atlas: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "atlas: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "atlas: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "atlas: internal error: " << e.what() << '\n';
        return 4;
    }
}
