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

#include "atlas/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <random>
#include <thread>

#include "atlas/bch_params.hpp"
#include "atlas/closed_form.hpp"
#include "atlas/coset_core.hpp"
#include "atlas/errors.hpp"

namespace atlas {

namespace {

enum class Check { Classify, Ladder, Cardinality, Dimensions, Band };

struct IdEntry {
    std::string_view id;
    Check check;
    std::optional<Family> family;
};

constexpr IdEntry kIds[] = {
    {"classify", Check::Classify, std::nullopt},
    {"ladder", Check::Ladder, std::nullopt},
    {"cardinality", Check::Cardinality, std::nullopt},
    {"dims", Check::Dimensions, std::nullopt},
    {"band", Check::Band, std::nullopt},
    {"2.4-band", Check::Band, std::nullopt},
    {"3.1", Check::Classify, Family::OddM},
    {"3.5", Check::Ladder, Family::OddM},
    {"3.6", Check::Cardinality, Family::OddM},
    {"3.7", Check::Dimensions, Family::OddM},
    {"4.1", Check::Classify, Family::FourTPlus2},
    {"4.5", Check::Ladder, Family::FourTPlus2},
    {"4.6", Check::Cardinality, Family::FourTPlus2},
    {"4.7", Check::Dimensions, Family::FourTPlus2},
    {"5.1", Check::Classify, Family::EightTPlus4},
    {"5.2", Check::Ladder, Family::EightTPlus4},
    {"5.3", Check::Cardinality, Family::EightTPlus4},
    {"5.4", Check::Dimensions, Family::EightTPlus4},
};

// An arithmetic run of candidates: first, first + step, ... (count terms).
struct Segment {
    Residue first = 0;
    std::uint64_t count = 0;
    Residue step = 1;
    int tag = 0;
};

using CaseFn = std::function<void(Residue, int, std::vector<Mismatch>&)>;

class CasePlan {
   public:
    CasePlan(const VerifyOptions& options) : options_(options), rng_(options.seed) {}

    // Adds [lo, hi] stepping by `step` from lo; sampled when the sweep is large.
    void add_range(Residue lo, Residue hi, Residue step, int tag = 0) {
        if (lo > hi) return;
        pending_.push_back({lo, (hi - lo) / step + 1, step, tag});
    }

    // Decides between exhaustive and sampled once all ranges are known.
    std::vector<Segment> finalize() {
        std::uint64_t total = 0;
        for (const auto& s : pending_) total += s.count;
        std::uint64_t per_range = 0;
        if (options_.sample) {
            per_range = *options_.sample;
        } else if (total > kExhaustiveLimit) {
            per_range = kDefaultSampleSize;
        }
        std::vector<Segment> out;
        for (const auto& s : pending_) {
            if (per_range == 0 || s.count <= per_range) {
                out.push_back(s);
                continue;
            }
            sampled_ = true;
            std::uniform_int_distribution<std::uint64_t> pick(0, s.count - 1);
            std::vector<std::uint64_t> idx(per_range);
            for (auto& i : idx) i = pick(rng_);
            std::sort(idx.begin(), idx.end());
            idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
            for (auto i : idx) out.push_back({s.first + i * s.step, 1, s.step, s.tag});
        }
        return out;
    }

    bool sampled() const noexcept { return sampled_; }

   private:
    VerifyOptions options_;
    std::mt19937_64 rng_;
    std::vector<Segment> pending_;
    bool sampled_ = false;
};

// Runs fn over global case indices [begin, end).
void run_slice(const std::vector<Segment>& segs, std::uint64_t begin, std::uint64_t end, const CaseFn& fn,
               std::vector<Mismatch>& out) {
    std::uint64_t base = 0;
    for (const auto& s : segs) {
        const std::uint64_t lo = std::max(begin, base), hi = std::min(end, base + s.count);
        for (std::uint64_t i = lo; i < hi; ++i) fn(s.first + (i - base) * s.step, s.tag, out);
        base += s.count;
        if (base >= end) break;
    }
}

// Contiguous chunks per worker, merged in input order.
std::uint64_t run_cases(const std::vector<Segment>& segs, unsigned threads, const CaseFn& fn,
                        std::vector<Mismatch>& mismatches) {
    std::uint64_t total = 0;
    for (const auto& s : segs) total += s.count;
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(total, 256))));
    std::vector<std::vector<Mismatch>> parts(threads);
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned w = 0; w < threads; ++w) {
        const std::uint64_t begin = total * w / threads, end = total * (w + 1) / threads;
        workers.emplace_back([&, w, begin, end] {
            try {
                run_slice(segs, begin, end, fn, parts[w]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    for (auto& p : parts) mismatches.insert(mismatches.end(), p.begin(), p.end());
    return total;
}

std::int64_t verdict_value(LeaderVerdict v) {
    switch (v) {
        case LeaderVerdict::Leader: return 1;
        case LeaderVerdict::NotLeader: return 0;
        default: return -1;
    }
}

void add_mismatch(std::vector<Mismatch>& out, const char* what, Residue x, std::int64_t closed, std::int64_t oracle) {
    if (closed != oracle) out.push_back({what, x, closed, oracle});
}

std::uint64_t check_classify(const CodeLength& length, CasePlan& plan, unsigned threads, std::vector<Mismatch>& out) {
    for (const auto& r : decided_ranges(length)) plan.add_range(r.lo, r.hi, 2);
    const auto segs = plan.finalize();
    return run_cases(segs, threads, [&](Residue x, int, std::vector<Mismatch>& mm) {
        add_mismatch(mm, "leader", x, verdict_value(classify_leader(x, length)), is_coset_leader(x, length) ? 1 : 0);
    }, out);
}

std::uint64_t check_ladder(const CodeLength& length, CasePlan& plan, unsigned threads, std::vector<Mismatch>& out) {
    const auto ladder = delta_ladder(length);
    const auto& d = ladder.deltas;
    for (std::size_t i = 0; i < 5; ++i) plan.add_range(d[i], d[i], 1, 1 + static_cast<int>(i));
    plan.add_range(d[4] + 2, length.n() - 2, 2, 0);
    const auto segs = plan.finalize();
    return run_cases(segs, threads, [&](Residue x, int tag, std::vector<Mismatch>& mm) {
        if (tag > 0) {
            const auto i = static_cast<std::size_t>(tag - 1);
            add_mismatch(mm, "ladder_leader", x, 1, is_coset_leader(x, length) ? 1 : 0);
            add_mismatch(mm, "ladder_size", x, ladder.coset_sizes[i], coset_of(x, length).size);
            return;
        }
        const bool on_ladder = std::find(d.begin(), d.end(), x) != d.end();
        add_mismatch(mm, "leader_above_delta5", x, on_ladder ? 1 : 0, is_coset_leader(x, length) ? 1 : 0);
    }, out);
}

std::uint64_t check_cardinality(const CodeLength& length, CasePlan& plan, unsigned threads,
                                std::vector<Mismatch>& out) {
    const auto ladder = delta_ladder(length);
    plan.add_range(1, envelope(length), 1);
    for (auto x : ladder.deltas) plan.add_range(x, x, 1);
    const auto segs = plan.finalize();
    return run_cases(segs, threads, [&](Residue x, int, std::vector<Mismatch>& mm) {
        add_mismatch(mm, "coset_size", x, coset_cardinality(x, length), coset_of(x, length).size);
    }, out);
}

std::uint64_t check_dimensions(const CodeLength& length, CasePlan& plan, unsigned threads,
                               std::vector<Mismatch>& out) {
    const auto table = shared_coset_table(length);
    for (int b : {1, 0}) {
        for (const auto& row : dimension_rows(length, b)) plan.add_range(row.lo | 1, row.hi, 2, b);
    }
    const auto segs = plan.finalize();
    const auto n = static_cast<std::int64_t>(length.n());
    return run_cases(segs, threads, [&](Residue delta, int b, std::vector<Mismatch>& mm) {
        const auto closed = dimension_closed(length, delta, b);
        const auto k = n - (b == 0 ? 1 : 0) - static_cast<std::int64_t>(table->sizes_below(delta));
        add_mismatch(mm, b == 1 ? "k" : "k0", delta, static_cast<std::int64_t>(closed.dimension), k);
        add_mismatch(mm, b == 1 ? "bose" : "bose0", delta, static_cast<std::int64_t>(closed.bose),
                     static_cast<std::int64_t>(table->next_leader(delta)));
    }, out);
}

std::uint64_t check_band(const CodeLength& length, CasePlan& plan, unsigned threads, std::vector<Mismatch>& out) {
    const unsigned h = (length.m() - 1) / 2;
    plan.add_range(2, Residue{1} << (h + 1), 1, 1);
    plan.add_range(2, (Residue{1} << h) + 2, 1, 0);
    const auto segs = plan.finalize();
    return run_cases(segs, threads, [&](Residue delta, int b, std::vector<Mismatch>& mm) {
        const auto formula = dim_small_delta(length, delta, b);
        const auto brute = static_cast<std::int64_t>(dimension_brute(length, delta, b).dimension);
        add_mismatch(mm, b == 1 ? "k" : "k0", delta, formula ? *formula : -1, brute);
    }, out);
}

}  // namespace

std::vector<std::string> verification_ids() {
    std::vector<std::string> ids;
    for (const auto& e : kIds) ids.emplace_back(e.id);
    return ids;
}

unsigned default_thread_count() {
    if (const char* env = std::getenv("ATLAS_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    }
    return 1;
}

VerificationReport verify(std::string_view theorem_id, unsigned m, const VerifyOptions& options) {
    const auto entry = std::find_if(std::begin(kIds), std::end(kIds), [&](const IdEntry& e) { return e.id == theorem_id; });
    if (entry == std::end(kIds)) throw UsageError("unknown verification id '" + std::string(theorem_id) + "'");

    std::optional<CodeLength> parsed;
    try {
        parsed.emplace(m);
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
    const CodeLength& length = *parsed;

    if (entry->family && length.family() != *entry->family) {
        throw UsageError("id " + std::string(theorem_id) + " covers m of the form " +
                         std::string(to_string(*entry->family)) + ", got m = " + std::to_string(m));
    }
    if (entry->check == Check::Band) {
        if (m < 3 || m > kTableMaxExponent) throw UsageError("band check needs 3 <= m <= 24");
    } else if (!closed_form_supported(length)) {
        throw UsageError("m = " + std::to_string(m) + " has no closed form (family " +
                         std::string(to_string(length.family())) + ", t = " + std::to_string(length.t()) + ")");
    }
    if (entry->check == Check::Dimensions && m > kTableMaxExponent) {
        throw UsageError("dimension sweeps need m <= " + std::to_string(kTableMaxExponent));
    }

    VerificationReport report;
    report.theorem_id = std::string(theorem_id);
    report.m = m;
    report.seed = options.seed;
    const auto start = std::chrono::steady_clock::now();

    CasePlan plan(options);
    const unsigned threads = std::max(1u, options.threads);
    switch (entry->check) {
        case Check::Classify: report.cases_checked = check_classify(length, plan, threads, report.mismatches); break;
        case Check::Ladder: report.cases_checked = check_ladder(length, plan, threads, report.mismatches); break;
        case Check::Cardinality:
            report.cases_checked = check_cardinality(length, plan, threads, report.mismatches);
            break;
        case Check::Dimensions:
            report.cases_checked = check_dimensions(length, plan, threads, report.mismatches);
            break;
        case Check::Band: report.cases_checked = check_band(length, plan, threads, report.mismatches); break;
    }
    report.sampled = plan.sampled();
    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return report;
}

nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json mismatches = nlohmann::json::array();
    for (const auto& mm : report.mismatches) {
        mismatches.push_back(
            {{"quantity", mm.quantity}, {"input", mm.input}, {"closed", mm.closed_value}, {"oracle", mm.oracle_value}});
    }
    return {{"theorem_id", report.theorem_id},
            {"m", report.m},
            {"status", report.passed() ? "PASS" : "FAIL"},
            {"cases_checked", report.cases_checked},
            {"mismatches", mismatches},
            {"elapsed_ms", report.elapsed_ms},
            {"sampled", report.sampled},
            {"seed", report.seed}};
}

}  // namespace atlas
