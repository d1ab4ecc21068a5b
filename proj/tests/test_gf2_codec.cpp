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
#include "atlas/gf2_codec.hpp"
#include "doctest.h"

using namespace atlas;

namespace {

BinaryPolynomial xn_plus_1(Residue n) { return BinaryPolynomial::monomial(n) + BinaryPolynomial::from_word(1); }

}  // namespace

TEST_CASE("primitive polynomials") {
    CHECK(smallest_primitive_polynomial(2) == 0b111);
    CHECK(smallest_primitive_polynomial(4) == 0b10011);
    CHECK(smallest_primitive_polynomial(6) == 0b1000011);
    CHECK(smallest_primitive_polynomial(8) == 0x11d);
    CHECK(is_irreducible(0b11111, 4));
    CHECK_FALSE(is_primitive(0b11111, 4));  // order 5
    CHECK_FALSE(is_irreducible(0b10101, 4));
}

TEST_CASE("field context") {
    const auto field = build_field(CodeLength(4));
    CHECK(field.extension_degree() == 8);
    CHECK(field.root_exponent() == 15);
    CHECK(field.pow(field.unity_root(), 17) == 1);
    for (Residue e = 1; e < 17; ++e) CHECK(field.root_power(e) != 1);
    CHECK_THROWS_AS(build_field(CodeLength(17)), CapacityError);
    CHECK_THROWS(FieldContext(CodeLength(4), 0b11111));
}

TEST_CASE("n = 9 generator polynomials") {
    const CodeLength length(3);
    const auto field = build_field(length);
    CHECK(minimal_polynomial(field, 0) == BinaryPolynomial::from_word(0b11));
    CHECK(minimal_polynomial(field, 3) == BinaryPolynomial::from_word(0b111));
    CHECK(minimal_polynomial(field, 1) == BinaryPolynomial::from_word(0b1001001));

    const auto g = generator_polynomial(field, length, 2, 0);
    CHECK(g == BinaryPolynomial::from_word(0b11011011));
    CHECK(g.degree() == 7);
    CHECK(min_weight_exhaustive(g, 9) == 6);
    CHECK(min_weight_exhaustive(g, 9).value() >= 2 * bose_distance(length, 2, 0));

    // X^9 + 1 itself: the defining set is all of Z_9.
    CHECK_THROWS_AS(generator_polynomial(field, length, 4, 0), DegenerateCode);
}

TEST_CASE("n = 17, delta = 5 gives the repetition code") {
    const CodeLength length(4);
    const auto field = build_field(length);
    const auto g = generator_polynomial(field, length, 5, 1);
    CHECK(g.degree() == 16);
    CHECK(g.weight() == 17);
    CHECK(g * BinaryPolynomial::from_word(0b11) == xn_plus_1(17));
    CHECK(min_weight_exhaustive(g, 17) == 17);
}

TEST_CASE("generators: degree, divisibility and self-reciprocity for m = 3..8") {
    for (unsigned m = 3; m <= 8; ++m) {
        const CodeLength length(m);
        const auto field = build_field(length);
        const auto xn1 = xn_plus_1(length.n());
        for (Residue d = 2; d <= length.n(); ++d) {
            for (int b : {0, 1}) {
                const auto size = defining_size(length, d, b);
                if (size >= length.n()) continue;
                const auto g = generator_polynomial(field, length, d, b);
                REQUIRE(g.degree() == static_cast<long>(size));
                REQUIRE((xn1 % g).is_zero());
                REQUIRE(is_self_reciprocal(g));
            }
        }
    }
}

TEST_CASE("minimum weight is at least the BCH bound for small k") {
    for (unsigned m = 3; m <= 6; ++m) {
        const CodeLength length(m);
        const auto field = build_field(length);
        for (Residue d = 2; d < length.n(); ++d) {
            for (int b : {0, 1}) {
                if (defining_size(length, d, b) >= length.n()) continue;
                const auto g = generator_polynomial(field, length, d, b);
                const auto w = min_weight_exhaustive(g, length.n());
                if (!w) continue;
                const auto bose = bose_distance(length, d, b);
                REQUIRE_MESSAGE(*w >= (b == 1 ? bose : 2 * bose), "m=" << m << " d=" << d << " b=" << b);
            }
        }
    }
}

TEST_CASE("systematic encoding") {
    const CodeLength length(4);
    const auto field = build_field(length);
    const auto g = generator_polynomial(field, length, 3, 1);  // k = 9
    const auto n = length.n();
    const auto k = n - static_cast<Residue>(g.degree());
    BitVector msg(k, 0);
    msg[0] = 1;
    msg[k - 1] = 1;
    const auto word = encode(msg, g, n);
    REQUIRE(word.size() == n);
    CHECK((BinaryPolynomial::from_bits(word) % g).is_zero());
    for (std::size_t i = 0; i < k; ++i) CHECK(word[g.degree() + i] == msg[i]);
    CHECK_THROWS(encode(BitVector(k + 1, 0), g, n));
    CHECK_FALSE(min_weight_exhaustive(generator_polynomial(field, length, 2, 1), n, 4).has_value());
}
