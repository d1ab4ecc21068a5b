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

#include "atlas/closed_form.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "atlas/errors.hpp"

namespace atlas {

namespace {

constexpr Residue pow2(unsigned e) { return Residue{1} << e; }

Residue exact_div(Residue num, Residue den, const char* what) {
    if (num % den != 0) {
        throw std::logic_error(std::string("inexact division computing ") + what + "; family misclassified");
    }
    return num / den;
}

void require_scheme_t(Scheme scheme, unsigned t) {
    if (t < scheme_min_t(scheme) || t > scheme_max_t(scheme)) {
        throw std::domain_error(std::string(to_string(scheme)) + " needs " + std::to_string(scheme_min_t(scheme)) +
                                " <= t <= " + std::to_string(scheme_max_t(scheme)) + ", got t = " + std::to_string(t));
    }
}

// Offsets of the IA1 base pieces: 2 + 2^3 + ... + 2^{2i-1}.
std::uint64_t ia1_base_offset(unsigned i) {
    std::uint64_t sum = 0;
    for (unsigned j = 1; j <= i; ++j) sum += pow2(2 * j - 1);
    return sum;
}

// 3 * (2^2 + 2^6 + ... + 2^{4i-2}).
std::uint64_t ia2_base_offset(unsigned i) {
    std::uint64_t sum = 0;
    for (unsigned j = 1; j <= i; ++j) sum += 3 * pow2(4 * j - 2);
    return sum;
}

}  // namespace

std::string_view to_string(LeaderVerdict verdict) noexcept {
    switch (verdict) {
        case LeaderVerdict::Leader: return "leader";
        case LeaderVerdict::NotLeader: return "not_leader";
        case LeaderVerdict::OutOfTheoremRange: return "out_of_range";
        case LeaderVerdict::UnsupportedFamily: return "unsupported";
    }
    return "unsupported";
}

std::string_view to_string(Scheme scheme) noexcept { return scheme == Scheme::IA1 ? "ia1" : "ia2"; }

unsigned family_floor(Family family) {
    switch (family) {
        case Family::OddM: return 5;
        case Family::FourTPlus2: return 2;
        case Family::EightTPlus4: return 1;
        case Family::Unsupported: break;
    }
    throw UnsupportedLength("m divisible by 8 has no closed form");
}

bool closed_form_supported(const CodeLength& length) noexcept {
    return length.family() != Family::Unsupported && length.t() >= family_floor(length.family());
}

void require_closed_form(const CodeLength& length) {
    if (length.family() == Family::Unsupported) {
        throw UnsupportedLength("m = " + std::to_string(length.m()) + " is divisible by 8; no closed form");
    }
    const unsigned floor = family_floor(length.family());
    if (length.t() < floor) {
        throw UnsupportedLength("m = " + std::to_string(length.m()) + " (family " + std::string(to_string(length.family())) +
                                ") needs t >= " + std::to_string(floor) + ", got t = " + std::to_string(length.t()));
    }
}

Residue envelope(const CodeLength& length) {
    require_closed_form(length);
    const unsigned t = length.t();
    switch (length.family()) {
        case Family::OddM: return pow2(t + 2) + 7;
        case Family::FourTPlus2: return pow2(2 * t + 2) + pow2(2 * t + 1) + 3;
        case Family::EightTPlus4: return pow2(4 * t + 3) + pow2(4 * t + 2) + pow2(4 * t + 1) + 1;
        case Family::Unsupported: break;
    }
    throw UnsupportedLength("unsupported family");
}

std::vector<DecidedRange> decided_ranges(const CodeLength& length) {
    require_closed_form(length);
    const unsigned t = length.t();
    std::vector<DecidedRange> r;
    auto leader = [&](Residue lo, Residue hi) { r.push_back({lo, hi, true}); };
    auto other = [&](Residue lo, Residue hi) { r.push_back({lo, hi, false}); };

    switch (length.family()) {
        case Family::OddM: {
            const Residue p = pow2(t + 1), q = pow2(t);
            leader(1, p - 3);
            other(p - 1, p + 1);
            leader(p + 3, p + q - 3);
            other(p + q - 1, p + q + 1);
            leader(p + q + 3, 2 * p - 9);
            other(2 * p - 7, 2 * p + 7);
            break;
        }
        case Family::FourTPlus2: {
            const Residue a = pow2(2 * t + 1), b = pow2(2 * t + 2), c = pow2(2 * t);
            leader(1, a - 1);
            other(a + 1, a + 1);
            leader(a + 3, b - 5);
            other(b - 3, b + 3);
            leader(b + 5, b + c - 3);
            other(b + c - 1, b + c + 1);
            leader(b + c + 3, b + a - 3);
            other(b + a - 1, b + a + 3);
            break;
        }
        case Family::EightTPlus4: {
            const Residue a = pow2(4 * t + 2), b = pow2(4 * t + 3), c = pow2(4 * t + 1);
            leader(1, a - 1);
            other(a + 1, a + 1);
            leader(a + 3, b - 5);
            other(b - 3, b + 3);
            leader(b + 5, b + c - 3);
            other(b + c - 1, b + c + 1);
            leader(b + c + 3, b + a - 3);
            other(b + a - 1, b + a + 3);
            leader(b + a + 5, b + a + c - 3);
            other(b + a + c - 1, b + a + c + 1);
            break;
        }
        case Family::Unsupported: break;
    }

    // The odd residues of [1, envelope] must be covered once each.
    Residue next = 1;
    for (const auto& range : r) {
        if (range.lo != next || range.hi < range.lo || range.hi % 2 == 0) {
            throw std::logic_error("decided ranges do not tile the odd residues at " + std::to_string(next));
        }
        next = range.hi + 2;
    }
    if (next != envelope(length) + 2) throw std::logic_error("decided ranges stop short of the envelope");
    return r;
}

LeaderVerdict classify_leader(Residue x, const CodeLength& length) {
    if (x == 0 || x >= length.n()) {
        throw std::domain_error("classify_leader needs 1 <= x < n, got " + std::to_string(x));
    }
    if (x % 2 == 0) throw std::domain_error("classify_leader needs odd x, got " + std::to_string(x));
    if (!closed_form_supported(length)) return LeaderVerdict::UnsupportedFamily;
    const auto ranges = decided_ranges(length);
    auto it = std::find_if(ranges.begin(), ranges.end(), [x](const DecidedRange& r) { return x <= r.hi; });
    if (it == ranges.end()) return LeaderVerdict::OutOfTheoremRange;
    return it->leader ? LeaderVerdict::Leader : LeaderVerdict::NotLeader;
}

DeltaLadder delta_ladder(const CodeLength& length) {
    require_closed_form(length);
    const unsigned t = length.t();
    const unsigned m = length.m();
    const Residue n = length.n();
    DeltaLadder ladder;
    auto& d = ladder.deltas;

    switch (length.family()) {
        case Family::OddM:
            d[0] = exact_div(n, 3, "n/3");
            d[1] = exact_div(n - 3, 6, "(n-3)/6");
            d[2] = d[1] - 2;
            d[3] = d[1] - 8;
            d[4] = d[1] - 10;
            ladder.coset_sizes[0] = 2;
            break;
        case Family::FourTPlus2:
            d[0] = exact_div(n, 5, "n/5");
            d[1] = pow2(4 * t - 1) + exact_div(pow2(4 * t) - 1, 5, "(2^{4t}-1)/5");
            d[2] = d[1] - 6;
            if (t == 2) {
                d[3] = d[1] - 8;
                d[4] = d[1] - 24;
            } else {
                d[3] = d[1] - 96;
                d[4] = d[1] - 102;
            }
            ladder.coset_sizes[0] = 4;
            break;
        case Family::EightTPlus4:
            d[0] = exact_div(3 * n, 17, "3n/17");
            if (t == 1) {
                d[1] = d[0] - 6;
                d[2] = d[1] - 24;
                d[3] = d[2] - 2;
                d[4] = d[3] - 38;
            } else {
                d[1] = d[0] - exact_div(d[0] + 45, 128, "(delta1+45)/128");
                d[2] = d[1] - 90;
                if (t == 2) {
                    d[3] = d[2] - 6;
                    d[4] = d[3] - 384;
                } else {
                    d[3] = d[2] - 22950;
                    d[4] = d[3] - 90;
                }
            }
            ladder.coset_sizes[0] = 8;
            break;
        case Family::Unsupported: break;
    }
    for (std::size_t i = 1; i < 5; ++i) ladder.coset_sizes[i] = 2 * m;
    return ladder;
}

unsigned coset_cardinality(Residue x, const CodeLength& length) {
    require_closed_form(length);
    if (x >= 1 && x <= envelope(length)) return length.order();
    const auto ladder = delta_ladder(length);
    for (std::size_t i = 0; i < 5; ++i) {
        if (ladder.deltas[i] == x) return ladder.coset_sizes[i];
    }
    throw OutOfTheoremRange("no closed-form cardinality for x = " + std::to_string(x) + " at m = " +
                            std::to_string(length.m()));
}

unsigned scheme_min_t(Scheme scheme) noexcept { return scheme == Scheme::IA1 ? 5 : 2; }
unsigned scheme_max_t(Scheme scheme) noexcept { return scheme == Scheme::IA1 ? 23 : 17; }

IntervalPartition ia_partition(Scheme scheme, unsigned t) {
    require_scheme_t(scheme, t);
    IntervalPartition part{scheme, t, {}};
    auto& iv = part.intervals;

    if (scheme == Scheme::IA1) {
        // The step below, run from the one-piece partition [1,2] of level 3,
        // reproduces I_2 = [a_1 + 2, 8] at level 4.
        iv.push_back({1, 2});
        for (unsigned level = 4; level <= t; ++level) {
            const std::uint64_t shift = pow2(2 * level - 7);
            const std::size_t half = iv.size();
            for (std::size_t j = 0; j + 1 < half; ++j) iv.push_back({iv[j].lo + shift, iv[j].hi + shift});
            iv.push_back({iv[half - 1].lo + shift, pow2(2 * level - 5)});
        }
    } else {
        iv.push_back({1, 12});
        for (unsigned level = 3; level <= t; ++level) {
            const std::uint64_t shift = 3 * pow2(4 * level - 10);
            const std::size_t half = iv.size();
            for (std::size_t j = 0; j + 1 < half; ++j) iv.push_back({iv[j].lo + shift, iv[j].hi + shift});
            iv.push_back({iv[half - 1].lo + shift, 3 * pow2(4 * level - 6)});
        }
    }
    return part;
}

IntervalLocation interval_locate(std::uint64_t s, unsigned t, Scheme scheme) {
    require_scheme_t(scheme, t);
    const std::uint64_t count = scheme == Scheme::IA1 ? pow2(t - 3) : pow2(t - 2);
    if (s < 1 || s > count) {
        throw std::domain_error("interval index " + std::to_string(s) + " outside [1, " + std::to_string(count) + "]");
    }
    const unsigned digit_bits = scheme == Scheme::IA1 ? 2 : 4;
    IntervalLocation loc;
    loc.i = static_cast<unsigned>(std::countr_zero(s));
    std::uint64_t higher = s >> (loc.i + 1);
    for (unsigned j = 0; higher != 0; ++j, higher >>= 1) {
        if (higher & 1) loc.lambda |= std::uint64_t{1} << (digit_bits * j);
    }
    return loc;
}

Interval interval_at(IntervalLocation loc, Scheme scheme) {
    Interval base;
    std::uint64_t stride = 0;
    if (scheme == Scheme::IA1) {
        base = {1 + ia1_base_offset(loc.i), pow2(2 * loc.i + 1)};
        stride = pow2(2 * loc.i + 3);
    } else {
        base = {1 + ia2_base_offset(loc.i), 3 * pow2(4 * loc.i + 2)};
        stride = 3 * pow2(4 * loc.i + 6);
    }
    return {base.lo + stride * loc.lambda, base.hi + stride * loc.lambda};
}

}  // namespace atlas
