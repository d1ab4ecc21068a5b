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

#include "atlas/bch_params.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "atlas/closed_form.hpp"
#include "atlas/errors.hpp"

namespace atlas {

namespace {

constexpr Residue pow2(unsigned e) { return Residue{1} << e; }

__extension__ using Wide = unsigned __int128;
__extension__ using SignedWide = __int128;

// Saturating arithmetic; anything above 2^126 compares as "huge".
constexpr Wide kWideCap = Wide{1} << 126;

Wide sat_mul(Wide a, Wide b) {
    if (a == 0 || b == 0) return 0;
    if (a > kWideCap / b) return kWideCap;
    return a * b;
}

Wide sat_pow(Wide base, std::uint64_t e) {
    Wide r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        r = sat_mul(r, base);
        if (r == kWideCap) break;
    }
    return r;
}

std::int64_t to_int64(SignedWide v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("dimension formula overflows 64 bits");
    }
    return static_cast<std::int64_t>(v);
}

CodeSpec make_spec(const CodeLength& length, Residue delta, int b, std::uint64_t dimension, Residue bose) {
    CodeSpec spec{length, b, delta, dimension, length.n() - dimension, bose, b == 1 ? delta : 2 * delta};
    return spec;
}

}  // namespace

CodeSpec dimension_brute(const CodeLength& length, Residue delta, int b) {
    const std::uint64_t size = defining_size(length, delta, b);
    return make_spec(length, delta, b, length.n() - size, bose_distance(length, delta, b));
}

std::vector<DimensionRow> dimension_rows(const CodeLength& length, int b) {
    if (b != 0 && b != 1) throw std::invalid_argument("b must be 0 or 1");
    require_closed_form(length);
    const unsigned t = length.t();
    const auto ladder = delta_ladder(length);
    std::vector<DimensionRow> rows;
    auto affine = [&](Residue lo, Residue hi, std::int64_t c) { rows.push_back({lo, hi, RowKind::Affine, c, 0, 0, 0}); };
    auto flat = [&](Residue lo, Residue hi, Residue anchor, std::int64_t c, Residue bose) {
        rows.push_back({lo, hi, RowKind::Flat, c, anchor, 0, bose});
    };

    std::int64_t ladder_c = 0;
    switch (length.family()) {
        case Family::OddM: {
            const Residue p = pow2(t + 1), q = pow2(t);
            affine(p + 3, p + q - 3, 5);
            affine(p + q + 3, 2 * p - 9, 9);
            flat(2 * p - 7, 2 * p + 9, 2 * p, 16, 2 * p + 9);
            ladder_c = 3;
            break;
        }
        case Family::FourTPlus2: {
            const Residue a = pow2(2 * t + 2) + pow2(2 * t + 1);
            affine(pow2(2 * t + 1) + 3, pow2(2 * t + 2) - 5, 3);
            affine(pow2(2 * t + 2) + 5, pow2(2 * t + 2) + pow2(2 * t) - 3, 11);
            affine(pow2(2 * t + 2) + pow2(2 * t) + 3, a - 3, 15);
            flat(a - 1, a + 5, a, 16, a + 5);
            ladder_c = 5;
            break;
        }
        case Family::EightTPlus4: {
            const Residue hi = pow2(4 * t + 3), mid = pow2(4 * t + 2), lo = pow2(4 * t + 1);
            const Residue top = hi + mid + lo;
            affine(mid + 3, hi - 5, 3);
            affine(hi + 5, hi + lo - 3, 11);
            affine(hi + lo + 3, hi + mid - 3, 15);
            affine(hi + mid + 5, top - 3, 21);
            flat(top - 1, top + 3, top, 22, top + 3);
            ladder_c = 9;
            break;
        }
        case Family::Unsupported: break;
    }

    for (unsigned i = 4; i >= 1; --i) {
        rows.push_back({ladder.deltas[i] + 2, ladder.deltas[i - 1], RowKind::Ladder, ladder_c, 0, i, ladder.deltas[i - 1]});
    }
    if (b == 1) rows.push_back({ladder.deltas[0] + 2, length.n(), RowKind::Terminal, 0, 0, 0, length.n()});
    return rows;
}

CodeSpec dimension_closed(const CodeLength& length, Residue delta, int b) {
    if (b != 0 && b != 1) throw std::invalid_argument("b must be 0 or 1");
    if (delta % 2 == 0) throw ParityError("closed-form dimensions need odd delta, got " + std::to_string(delta));
    const auto rows = dimension_rows(length, b);
    const SignedWide n = length.n();
    const SignedWide m = length.m();
    for (const auto& row : rows) {
        if (delta < row.lo || delta > row.hi) continue;
        SignedWide k = 0;
        switch (row.kind) {
            case RowKind::Affine: k = n - m * static_cast<SignedWide>(delta) + row.c * m; break;
            case RowKind::Flat: k = n - m * static_cast<SignedWide>(row.anchor) + row.c * m; break;
            case RowKind::Ladder: k = 2 * m * (row.ladder_index - 1) + row.c; break;
            case RowKind::Terminal: k = 1; break;
        }
        if (b == 0) k -= 1;
        if (k < 0) throw std::logic_error("closed form produced a negative dimension");
        return make_spec(length, delta, b, static_cast<std::uint64_t>(k), row.bose == 0 ? delta : row.bose);
    }
    throw OutOfTheoremRange("delta = " + std::to_string(delta) + " lies in no closed-form row for m = " +
                            std::to_string(length.m()) + "; use the brute-force dimension");
}

DimensionBound dim_lower_bound_generic(std::uint64_t n, std::uint64_t ord, std::uint64_t delta,
                                       bool narrow_binary_odd) {
    if (delta < 2) throw std::domain_error("designed distance must be >= 2");
    SignedWide loss = static_cast<SignedWide>(ord) * static_cast<SignedWide>(delta - 1);
    if (narrow_binary_odd) {
        if (delta % 2 == 0) throw std::domain_error("the binary narrow-sense refinement needs odd delta");
        loss /= 2;
    }
    const std::int64_t value = to_int64(static_cast<SignedWide>(n) - loss);
    return {value, value <= 0};
}

std::optional<std::int64_t> dim_aly(std::uint64_t n, std::uint64_t q, std::uint64_t ord, std::uint64_t delta) {
    if (q < 2 || std::gcd(q, n) != 1) throw std::domain_error("dim_aly needs q >= 2 and gcd(q, n) = 1");
    const Wide qm = sat_pow(q, ord);
    if (sat_pow(q, ord / 2) > n || Wide{n} > qm - 1) return std::nullopt;
    // delta <= n * q^{ceil(m/2)} / (q^m - 1), compared without division.
    if (delta < 2 || delta > n) return std::nullopt;
    if (sat_mul(delta, qm - 1) > sat_mul(n, sat_pow(q, (ord + 1) / 2))) return std::nullopt;
    const std::uint64_t span = (delta - 1) * (q - 1);
    const std::uint64_t ceil_part = (span + q - 1) / q;
    return to_int64(static_cast<SignedWide>(n) - static_cast<SignedWide>(ord) * ceil_part);
}

std::optional<std::int64_t> dim_small_delta(const CodeLength& length, Residue delta, int b) {
    if (b != 0 && b != 1) throw std::invalid_argument("b must be 0 or 1");
    const unsigned m = length.m();
    if (m < 3 || delta < 2) return std::nullopt;
    const unsigned h = (m - 1) / 2;
    const SignedWide two_m = 2 * m;
    const SignedWide base = pow2(m);
    const auto reduced = [](Residue d) { return static_cast<SignedWide>(d - 1 - (d - 1) / 2); };

    if (b == 0) {
        if (delta > pow2(h) + 2) return std::nullopt;
        return to_int64(base - two_m * reduced(delta));
    }
    if (delta > pow2(h + 1)) return std::nullopt;
    if (m % 2 == 1 && delta >= pow2(h + 1) - 1) {
        return to_int64(base + 1 - two_m * (static_cast<SignedWide>(pow2(h + 1)) - 2 - (delta - 1) / 2));
    }
    return to_int64(base + 1 - two_m * reduced(delta));
}

}  // namespace atlas
