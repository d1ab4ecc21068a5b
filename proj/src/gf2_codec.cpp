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

#include "atlas/gf2_codec.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "atlas/errors.hpp"

namespace atlas {

namespace {

int packed_degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

// a * b mod poly for a, b of degree < degree <= 32.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, PackedPolynomial poly, unsigned degree) {
    std::uint64_t product = 0;
    for (; b != 0; b &= b - 1) product ^= a << std::countr_zero(b);
    for (int bit = packed_degree(product); bit >= static_cast<int>(degree); bit = packed_degree(product)) {
        product ^= poly << (bit - static_cast<int>(degree));
    }
    return product;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, PackedPolynomial poly, unsigned degree) {
    std::uint64_t result = 1;
    while (e != 0) {
        if (e & 1) result = mulmod(result, a, poly, degree);
        a = mulmod(a, a, poly, degree);
        e >>= 1;
    }
    return result;
}

std::uint64_t packed_mod(std::uint64_t a, std::uint64_t b) {
    const int db = packed_degree(b);
    for (int da = packed_degree(a); da >= db; da = packed_degree(a)) a ^= b << (da - db);
    return a;
}

std::uint64_t packed_gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        a = packed_mod(a, b);
        std::swap(a, b);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p * p <= v; ++p) {
        if (v % p != 0) continue;
        primes.push_back(p);
        while (v % p == 0) v /= p;
    }
    if (v > 1) primes.push_back(v);
    return primes;
}

void require_modulus_shape(PackedPolynomial poly, unsigned degree) {
    if (degree < 1 || degree > kMaxFieldDegree || packed_degree(poly) != static_cast<int>(degree)) {
        throw std::domain_error("modulus must have degree " + std::to_string(degree) + " <= " +
                                std::to_string(kMaxFieldDegree));
    }
}

}  // namespace

bool is_irreducible(PackedPolynomial poly, unsigned degree) {
    require_modulus_shape(poly, degree);
    // Ben-Or: no factor of degree <= degree/2 divides poly.
    std::uint64_t x_power = 2;  // X^{2^i} mod poly
    for (unsigned i = 1; i <= degree / 2; ++i) {
        x_power = mulmod(x_power, x_power, poly, degree);
        if (packed_gcd(poly, x_power ^ 2) != 1) return false;
    }
    return true;
}

bool is_primitive(PackedPolynomial poly, unsigned degree) {
    require_modulus_shape(poly, degree);
    if ((poly & 1) == 0) return false;
    const std::uint64_t order = (std::uint64_t{1} << degree) - 1;
    if (powmod(2, order, poly, degree) != 1) return false;
    for (auto p : prime_factors(order)) {
        if (powmod(2, order / p, poly, degree) == 1) return false;
    }
    return true;
}

PackedPolynomial smallest_primitive_polynomial(unsigned degree) {
    if (degree < 2 || degree > kMaxFieldDegree) throw CapacityError("field degree must lie in [2, 32]");
    const PackedPolynomial top = PackedPolynomial{1} << degree;
    for (PackedPolynomial low = 1; low < top; low += 2) {
        if (is_primitive(top | low, degree)) return top | low;
    }
    throw std::logic_error("no primitive polynomial found");
}

FieldContext::FieldContext(const CodeLength& length, PackedPolynomial modulus)
    : length_(length), degree_(2 * length.m()), modulus_(modulus), xi_(0) {
    if (degree_ > kMaxFieldDegree) {
        throw CapacityError("GF(2^" + std::to_string(degree_) + ") exceeds the 2m <= 32 cap");
    }
    require_modulus_shape(modulus, degree_);
    if (!is_irreducible(modulus, degree_)) throw std::domain_error("field modulus is reducible");

    xi_ = static_cast<FieldElement>(powmod(2, root_exponent(), modulus_, degree_));
    const Residue n = length.n();
    bool exact_order = pow(xi_, n) == 1;
    for (auto p : prime_factors(n)) exact_order = exact_order && pow(xi_, n / p) != 1;
    if (!exact_order) {
        throw std::domain_error("alpha^((2^{2m}-1)/n) does not have order n; modulus is not primitive");
    }
}

FieldElement FieldContext::mul(FieldElement a, FieldElement b) const noexcept {
    return static_cast<FieldElement>(mulmod(a, b, modulus_, degree_));
}

FieldElement FieldContext::pow(FieldElement a, std::uint64_t e) const noexcept {
    return static_cast<FieldElement>(powmod(a, e, modulus_, degree_));
}

FieldElement FieldContext::root_power(Residue e) const noexcept { return pow(xi_, e % length_.n()); }

FieldContext build_field(const CodeLength& length) {
    if (2 * length.m() > kMaxFieldDegree) {
        throw CapacityError("GF(2^" + std::to_string(2 * length.m()) + ") exceeds the 2m <= 32 cap");
    }
    return FieldContext(length, smallest_primitive_polynomial(2 * length.m()));
}

BinaryPolynomial minimal_polynomial(const FieldContext& field, Residue i) {
    const auto coset = coset_of(i, field.length());
    std::vector<FieldElement> coeffs{1};
    for (Residue j : coset.elements) {
        const FieldElement root = field.root_power(j);
        std::vector<FieldElement> next(coeffs.size() + 1, 0);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            next[k + 1] ^= coeffs[k];
            next[k] ^= field.mul(root, coeffs[k]);
        }
        coeffs = std::move(next);
    }
    BitVector bits(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] > 1) {
            throw std::logic_error("minimal polynomial of xi^" + std::to_string(i) + " left the prime field");
        }
        bits[k] = static_cast<std::uint8_t>(coeffs[k]);
    }
    return BinaryPolynomial::from_bits(bits);
}

BinaryPolynomial generator_polynomial(const FieldContext& field, const CodeLength& length, Residue delta, int b) {
    if (!(field.length() == length)) throw std::invalid_argument("field was built for a different length");
    const auto ds = defining_set(length, delta, b);
    if (ds.size >= length.n()) {
        throw DegenerateCode("defining set covers all of Z_n (delta = " + std::to_string(delta) + ", b = " +
                             std::to_string(b) + ")");
    }
    auto g = BinaryPolynomial::from_word(1);
    for (Residue leader : ds.leaders) g *= minimal_polynomial(field, leader);
    return g;
}

bool is_self_reciprocal(const BinaryPolynomial& p) {
    if (p.is_zero() || !p.coeff(0)) throw std::domain_error("reciprocal needs a nonzero constant term");
    return p.reciprocal() == p;
}

BitVector encode(std::span<const std::uint8_t> msg, const BinaryPolynomial& g, Residue n) {
    if (g.is_zero() || g.degree() >= static_cast<long>(n)) throw std::domain_error("generator must have degree < n");
    const auto r = static_cast<std::size_t>(g.degree());
    if (msg.size() != n - r) {
        throw std::domain_error("message length " + std::to_string(msg.size()) + " differs from k = " +
                                std::to_string(n - r));
    }
    const auto shifted = BinaryPolynomial::from_bits(msg).shifted(r);
    return (shifted + shifted % g).to_bits(n);
}

std::optional<std::size_t> min_weight_exhaustive(const BinaryPolynomial& g, Residue n, unsigned k_cap) {
    if (g.is_zero() || g.degree() > static_cast<long>(n)) throw std::domain_error("generator must have degree <= n");
    const std::uint64_t k = n - static_cast<std::uint64_t>(g.degree());
    if (k == 0 || k > k_cap || k > 63) return std::nullopt;

    const std::size_t words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> basis(k, std::vector<std::uint64_t>(words, 0));
    for (std::uint64_t j = 0; j < k; ++j) {
        const auto row = g.shifted(j);
        std::copy(row.words().begin(), row.words().end(), basis[j].begin());
    }
    std::vector<std::uint64_t> word(words, 0);
    std::size_t best = n + 1;
    // Gray-code walk: step i flips message bit ctz(i).
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
        const auto& flip = basis[static_cast<std::size_t>(std::countr_zero(i))];
        std::size_t weight = 0;
        for (std::size_t w = 0; w < words; ++w) {
            word[w] ^= flip[w];
            weight += static_cast<std::size_t>(std::popcount(word[w]));
        }
        best = std::min(best, weight);
    }
    return best;
}

}  // namespace atlas
