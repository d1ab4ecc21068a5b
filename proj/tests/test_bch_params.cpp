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

#include <stdexcept>

#include "atlas/bch_params.hpp"
#include "atlas/errors.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace atlas;

namespace {

std::uint64_t closed_k(unsigned m, Residue delta, int b = 1) {
    return dimension_closed(CodeLength(m), delta, b).dimension;
}

}  // namespace

TEST_CASE("brute-force dimensions against the set oracle") {
    for (unsigned m = 3; m <= 8; ++m) {
        const CodeLength length(m);
        for (Residue d = 2; d < length.n(); ++d) {
            for (int b : {0, 1}) {
                const auto spec = dimension_brute(length, d, b);
                const auto t = oracle::defining_set(length.n(), d, b);
                REQUIRE(spec.defining_size == t.size());
                REQUIRE(spec.dimension == length.n() - t.size());
                REQUIRE(spec.bose == oracle::bose(length.n(), d));
                REQUIRE(spec.distance_bound == (b == 1 ? d : 2 * d));
            }
        }
    }
}

TEST_CASE("spot dimensions") {
    CHECK(closed_k(11, 67) == 1367);
    CHECK(closed_k(11, 121) == 817);
    CHECK(closed_k(11, 343) == 3);
    CHECK(closed_k(12, 67) == 3329);
    CHECK(closed_k(10, 35) == 705);
    CHECK(dimension_brute(CodeLength(10), 5, 1).dimension == 985);
    CHECK(dimension_brute(CodeLength(11), 3, 0).dimension == 2026);
    CHECK(dimension_brute(CodeLength(11), 67, 1).dimension == 1367);
    CHECK(dimension_brute(CodeLength(12), 67, 1).dimension == 3329);
}

TEST_CASE("row Bose distances") {
    CHECK(dimension_closed(CodeLength(11), 129, 1).bose == 137);
    CHECK(dimension_closed(CodeLength(10), 97, 1).bose == 101);
    CHECK(dimension_closed(CodeLength(13), 257, 1).bose == 265);
    CHECK(dimension_closed(CodeLength(14), 385, 1).bose == 389);
    CHECK(dimension_closed(CodeLength(12), 223, 1).bose == 227);
    CHECK(dimension_brute(CodeLength(11), 129, 1).bose == 137);
}

TEST_CASE("closed dimensions equal brute force on every row") {
    for (unsigned m : {10u, 11u, 13u, 14u}) {
        const CodeLength length(m);
        for (int b : {0, 1}) {
            for (const auto& row : dimension_rows(length, b)) {
                for (Residue d = row.lo | 1; d <= row.hi; d += 2) {
                    const auto closed = dimension_closed(length, d, b);
                    const auto brute = dimension_brute(length, d, b);
                    REQUIRE_MESSAGE(closed.dimension == brute.dimension, "m=" << m << " b=" << b << " delta=" << d);
                    REQUIRE(closed.bose == brute.bose);
                }
            }
        }
    }
}

TEST_CASE("m = 12 rows agree with brute force outside the fourth ladder row") {
    const CodeLength length(12);
    for (int b : {0, 1}) {
        for (const auto& row : dimension_rows(length, b)) {
            if (row.kind == RowKind::Ladder && row.ladder_index == 4) continue;
            for (Residue d = row.lo | 1; d <= row.hi; d += 2) {
                REQUIRE(dimension_closed(length, d, b).dimension == dimension_brute(length, d, b).dimension);
            }
        }
    }
    // The fourth row spans (653, 691]; the true leaders there are 661, 683
    // and 685, so brute force gives 153 where the formula gives 81.
    CHECK(dimension_closed(length, 655, 1).dimension == 81);
    CHECK(dimension_brute(length, 655, 1).dimension == 153);
}

TEST_CASE("terminal row") {
    const CodeLength length(11);
    for (Residue d : {685u, 1001u, 2049u}) {
        const auto spec = dimension_closed(length, d, 1);
        CHECK(spec.dimension == 1);
        CHECK(spec.bose == 2049);
        CHECK(dimension_brute(length, d, 1).dimension == 1);
    }
    CHECK_THROWS_AS(dimension_closed(length, 685, 0), OutOfTheoremRange);
}

TEST_CASE("b = 0 drops one dimension") {
    const CodeLength length(11);
    for (Residue d : {67u, 121u, 343u}) {
        CHECK(dimension_closed(length, d, 0).dimension + 1 == dimension_closed(length, d, 1).dimension);
        CHECK(dimension_closed(length, d, 0).distance_bound == 2 * d);
    }
}

TEST_CASE("closed dimension errors") {
    CHECK_THROWS_AS(dimension_closed(CodeLength(11), 68, 1), ParityError);
    CHECK_THROWS_AS(dimension_closed(CodeLength(11), 5, 1), OutOfTheoremRange);
    CHECK_THROWS_AS(dimension_closed(CodeLength(16), 5, 1), UnsupportedLength);
    CHECK_THROWS_AS(dimension_closed(CodeLength(11), 67, 2), std::invalid_argument);
}

TEST_CASE("generic lower bound") {
    const auto refined = dim_lower_bound_generic(2049, 22, 5, true);
    CHECK(refined.value == 2005);
    CHECK_FALSE(refined.vacuous);
    CHECK(dim_lower_bound_generic(2049, 22, 5, false).value == 1961);
    CHECK(dim_lower_bound_generic(2049, 22, 683, true).vacuous);
    CHECK_THROWS(dim_lower_bound_generic(2049, 22, 6, true));
    const CodeLength length(11);
    for (Residue d = 3; d < 400; d += 2) {
        REQUIRE(dim_lower_bound_generic(2049, 22, d, true).value <=
                static_cast<std::int64_t>(dimension_brute(length, d, 1).dimension));
    }
}

TEST_CASE("dimension formula for short windows of delta") {
    CHECK(dim_aly(31, 2, 5, 5) == 21);
    CHECK(dim_aly(31, 2, 5, 7) == 16);
    CHECK_FALSE(dim_aly(31, 2, 5, 9).has_value());
    CHECK_FALSE(dim_aly(2049, 2, 22, 5).has_value());
    CHECK_THROWS(dim_aly(31, 31, 1, 3));
}

TEST_CASE("small-delta band matches brute force") {
    for (unsigned m : {5u, 6u, 7u, 8u, 9u, 10u, 11u, 12u}) {
        const CodeLength length(m);
        const unsigned h = (m - 1) / 2;
        for (Residue d = 2; d <= (Residue{1} << (h + 1)); ++d) {
            REQUIRE(dim_small_delta(length, d, 1).value() ==
                    static_cast<std::int64_t>(dimension_brute(length, d, 1).dimension));
        }
        for (Residue d = 2; d <= (Residue{1} << h) + 2; ++d) {
            REQUIRE(dim_small_delta(length, d, 0).value() ==
                    static_cast<std::int64_t>(dimension_brute(length, d, 0).dimension));
        }
        CHECK_FALSE(dim_small_delta(length, (Residue{1} << (h + 1)) + 1, 1).has_value());
    }
}
