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

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "atlas/coset_core.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace atlas;

namespace {

std::vector<Residue> leaders_of(const std::vector<CosetRecord>& recs) {
    std::vector<Residue> out;
    for (const auto& r : recs) out.push_back(r.leader);
    return out;
}

}  // namespace

TEST_CASE("code length families") {
    CHECK(CodeLength(11).family() == Family::OddM);
    CHECK(CodeLength(11).t() == 5);
    CHECK(CodeLength(10).family() == Family::FourTPlus2);
    CHECK(CodeLength(10).t() == 2);
    CHECK(CodeLength(12).family() == Family::EightTPlus4);
    CHECK(CodeLength(12).t() == 1);
    CHECK(CodeLength(16).family() == Family::Unsupported);
    CHECK(CodeLength(11).n() == 2049);
    CHECK(CodeLength(11).order() == 22);
    CHECK(CodeLength(62).n() == (Residue{1} << 62) + 1);
    CHECK_THROWS_AS(CodeLength(1), std::domain_error);
    CHECK_THROWS_AS(CodeLength(63), std::domain_error);
}

TEST_CASE("n = 9 worked example") {
    const CodeLength nine(3);
    CHECK(coset_of(1, nine).elements == std::vector<Residue>{1, 2, 4, 5, 7, 8});
    CHECK(coset_of(3, nine).elements == std::vector<Residue>{3, 6});
    CHECK(coset_of(5, nine).leader == 1);
    CHECK(leaders_of(enumerate_leaders(nine, 1, 8)) == std::vector<Residue>{1, 3});
}

TEST_CASE("C_3 modulo 17") {
    CHECK(coset_of(3, Residue{17}).elements == std::vector<Residue>{3, 5, 6, 7, 10, 11, 12, 14});
    CHECK(coset_of(3, Residue{17}).size == 8);
}

TEST_CASE("half-orbit test agrees with the set oracle") {
    for (unsigned m = 2; m <= 11; ++m) {
        const CodeLength length(m);
        for (Residue x = 1; x < length.n(); ++x) {
            const bool expected = oracle::is_leader(x, length.n());
            REQUIRE_MESSAGE(is_coset_leader(x, length) == expected, "m=" << m << " x=" << x);
            REQUIRE(is_coset_leader(x, length.n()) == expected);
            const auto c = coset_of(x, length);
            REQUIRE(c.size == oracle::coset(x, length.n()).size());
        }
    }
}

TEST_CASE("leaders are the minima of their cosets up to m = 16") {
    for (unsigned m : {12u, 13u, 14u, 15u, 16u}) {
        const CodeLength length(m);
        const auto table = shared_coset_table(length);
        REQUIRE(table);
        for (Residue x : table->leaders()) {
            const auto c = coset_of(x, length);
            REQUIRE(c.elements.front() == x);
        }
    }
}

TEST_CASE("cosets partition Z_n and are closed under negation") {
    for (unsigned m = 2; m <= 12; ++m) {
        const CodeLength length(m);
        const Residue n = length.n();
        std::vector<int> seen(n, 0);
        std::uint64_t total = 1;  // C_0
        for (const auto& rec : enumerate_leaders(length, 1, n - 1)) {
            total += rec.size;
            CHECK(length.order() % rec.size == 0);
            for (Residue y : rec.elements) {
                ++seen[y];
                CHECK(std::binary_search(rec.elements.begin(), rec.elements.end(), n - y));
            }
        }
        CHECK(total == n);
        CHECK(std::all_of(seen.begin() + 1, seen.end(), [](int c) { return c == 1; }));
    }
}

TEST_CASE("even residues are never leaders") {
    const CodeLength length(11);
    for (Residue x = 2; x < length.n(); x += 2) REQUIRE_FALSE(is_coset_leader(x, length));
    CHECK_THROWS(is_coset_leader(0, length));
    CHECK_THROWS(is_coset_leader(length.n(), length));
}

TEST_CASE("top leaders") {
    CHECK(leaders_of(top_leaders(CodeLength(10), 5)) == std::vector<Residue>{205, 179, 173, 171, 155});
    CHECK(leaders_of(top_leaders(CodeLength(11), 5)) == std::vector<Residue>{683, 341, 339, 333, 331});
    CHECK(leaders_of(top_leaders(CodeLength(13), 5)) == std::vector<Residue>{2731, 1365, 1363, 1357, 1355});
    CHECK(leaders_of(top_leaders(CodeLength(14), 5)) == std::vector<Residue>{3277, 2867, 2861, 2771, 2765});
    CHECK(leaders_of(top_leaders(CodeLength(20), 5)) ==
          std::vector<Residue>{185043, 183597, 183507, 183501, 183117});
}

TEST_CASE("m = 12: the fifth largest leader is 685 and 653 is not a leader") {
    const CodeLength length(12);
    const auto top = top_leaders(length, 5);
    CHECK(leaders_of(top) == std::vector<Residue>{723, 717, 693, 691, 685});
    CHECK(top[0].size == 8);
    CHECK_FALSE(is_coset_leader(653, length));
    CHECK(coset_of(653, length).leader == 411);
}

TEST_CASE("every odd x in [67, 93] leads its coset for m = 11") {
    const CodeLength length(11);
    for (Residue x = 67; x <= 93; x += 2) CHECK(is_coset_leader(x, length));
}

TEST_CASE("defining sets") {
    const CodeLength length(11);
    CHECK(defining_set(length, 5, 1).size == 44);
    CHECK(defining_set(length, 5, 1).leaders == std::vector<Residue>{1, 3});
    CHECK(defining_set(length, 5, 0).leaders == std::vector<Residue>{0, 1, 3});
    CHECK(defining_size(length, 5, 0) == 45);
    CHECK_THROWS_AS(defining_set(length, 1, 1), std::domain_error);
    CHECK_THROWS_AS(defining_set(length, 2050, 1), std::domain_error);
    CHECK_THROWS_AS(defining_set(length, 5, 2), std::invalid_argument);

    for (unsigned m = 3; m <= 9; ++m) {
        const CodeLength l(m);
        for (Residue d = 2; d <= l.n(); ++d) {
            for (int b : {0, 1}) {
                REQUIRE(defining_size(l, d, b) == oracle::defining_set(l.n(), d, b).size());
            }
        }
    }
}

TEST_CASE("defining set size is monotone in delta") {
    const CodeLength length(12);
    std::uint64_t prev = 0;
    for (Residue d = 2; d <= length.n(); ++d) {
        const auto s = defining_size(length, d, 1);
        REQUIRE(s >= prev);
        prev = s;
    }
    CHECK(prev == length.n() - 1);
}

TEST_CASE("Bose distance") {
    const CodeLength length(11);
    CHECK(bose_distance(length, 343, 1) == 683);
    CHECK(bose_distance(length, 5, 1) == 5);
    CHECK(bose_distance(CodeLength(3), 2, 1) == 3);
    CHECK(bose_distance(length, 685, 1) == 2049);
    for (unsigned m = 3; m <= 8; ++m) {
        const CodeLength l(m);
        for (Residue d = 2; d <= l.n(); ++d) REQUIRE(bose_distance(l, d, 1) == oracle::bose(l.n(), d));
    }
}

TEST_CASE("direct scan above the table limit matches the table") {
    // m = 25 has no table; its small-delta answers come from the scan path.
    const CodeLength big(25);
    CHECK(shared_coset_table(big) == nullptr);
    CHECK(defining_size(big, 5, 1) == 100);
    CHECK(bose_distance(big, 4, 1) == 5);
}
