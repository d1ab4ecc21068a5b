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

#include <random>
#include <stdexcept>

#include "atlas/binary_polynomial.hpp"
#include "doctest.h"

using atlas::BinaryPolynomial;

namespace {

BinaryPolynomial random_poly(std::mt19937_64& rng, std::size_t max_degree) {
    BinaryPolynomial p;
    const std::size_t deg = rng() % (max_degree + 1);
    for (std::size_t i = 0; i <= deg; ++i) p.set_coeff(i, rng() & 1);
    p.set_coeff(deg, true);
    return p;
}

}  // namespace

TEST_CASE("basic accessors") {
    const auto p = BinaryPolynomial::from_word(0b1011);  // X^3 + X + 1
    CHECK(p.degree() == 3);
    CHECK(p.weight() == 3);
    CHECK(p.coeff(1));
    CHECK_FALSE(p.coeff(2));
    CHECK_FALSE(p.coeff(500));
    CHECK(BinaryPolynomial().degree() == -1);
    CHECK(BinaryPolynomial().is_zero());
    CHECK(BinaryPolynomial::monomial(130).degree() == 130);
    CHECK(p.to_bits(5) == atlas::BitVector{1, 1, 0, 1, 0});
}

TEST_CASE("products and remainders") {
    const auto x1 = BinaryPolynomial::from_word(0b11);
    const auto x2 = BinaryPolynomial::from_word(0b111);
    const auto x6 = BinaryPolynomial::from_word(0b1001001);
    const auto x9 = BinaryPolynomial::monomial(9) + BinaryPolynomial::from_word(1);
    CHECK(x1 * x2 * x6 == x9);
    CHECK((x9 % x6).is_zero());
    CHECK(x9 / x6 == x1 * x2);
    CHECK_THROWS(x9 % BinaryPolynomial());
}

TEST_CASE("division identity on random multiword operands") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_poly(rng, 300);
        const auto b = random_poly(rng, 150);
        const auto [q, r] = divmod(a, b);
        REQUIRE(q * b + r == a);
        REQUIRE(r.degree() < b.degree());
        REQUIRE((a * b) % b == BinaryPolynomial());
    }
}

TEST_CASE("hex serialization") {
    CHECK(BinaryPolynomial::from_word(0x11d).to_hex() == "deg=8;hex=1d01");
    CHECK(BinaryPolynomial().to_hex() == "deg=-1;hex=");
    CHECK(BinaryPolynomial::from_hex("deg=-1;hex=").is_zero());
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = random_poly(rng, 400);
        REQUIRE(BinaryPolynomial::from_hex(p.to_hex()) == p);
    }
    CHECK_THROWS(BinaryPolynomial::from_hex("deg=8;hex=1d"));
    CHECK_THROWS(BinaryPolynomial::from_hex("deg=8;hex=1d00"));
    CHECK_THROWS(BinaryPolynomial::from_hex("8;1d01"));
}

TEST_CASE("reciprocal") {
    const auto p = BinaryPolynomial::from_word(0b1101);  // X^3 + X^2 + 1
    CHECK(p.reciprocal() == BinaryPolynomial::from_word(0b1011));
    CHECK(p.reciprocal().reciprocal() == p);
}
