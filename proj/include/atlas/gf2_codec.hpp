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

#ifndef ATLAS_GF2_CODEC_HPP
#define ATLAS_GF2_CODEC_HPP

/**
 * @file gf2_codec.hpp
 * @brief Builds the antiprimitive BCH codes themselves.
 *
 * The splitting field of X^n + 1, n = 2^m + 1, is GF(2^{2m}). Field
 * elements are packed into one 32-bit word in the polynomial basis of the
 * lexicographically smallest primitive polynomial of degree 2m, so every
 * result below is reproducible bit for bit.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "atlas/binary_polynomial.hpp"
#include "atlas/coset_core.hpp"

namespace atlas {

using FieldElement = std::uint32_t;

// 2m <= 32, i.e. m <= 16.
inline constexpr unsigned kMaxFieldDegree = 32;

/// Packed modulus polynomial including the X^degree term.
using PackedPolynomial = std::uint64_t;

bool is_irreducible(PackedPolynomial poly, unsigned degree);
bool is_primitive(PackedPolynomial poly, unsigned degree);
/// Smallest packed value among primitive polynomials of the given degree.
PackedPolynomial smallest_primitive_polynomial(unsigned degree);

class FieldContext {
   public:
    FieldContext(const CodeLength& length, PackedPolynomial modulus);

    const CodeLength& length() const noexcept { return length_; }
    unsigned extension_degree() const noexcept { return degree_; }
    PackedPolynomial modulus() const noexcept { return modulus_; }
    BinaryPolynomial modulus_polynomial() const { return BinaryPolynomial::from_word(modulus_); }
    /// 2^{2m} - 1.
    std::uint64_t group_order() const noexcept { return (std::uint64_t{1} << degree_) - 1; }
    /// e with unity_root() = alpha^e, e = (2^{2m} - 1) / n.
    std::uint64_t root_exponent() const noexcept { return group_order() / length_.n(); }
    /// xi, an element of multiplicative order exactly n.
    FieldElement unity_root() const noexcept { return xi_; }

    FieldElement mul(FieldElement a, FieldElement b) const noexcept;
    FieldElement pow(FieldElement a, std::uint64_t e) const noexcept;
    /// xi^e, e reduced modulo n.
    FieldElement root_power(Residue e) const noexcept;

   private:
    CodeLength length_;
    unsigned degree_;
    PackedPolynomial modulus_;
    FieldElement xi_;
};

/// GF(2^{2m}) with the smallest primitive modulus. Throws CapacityError
/// when 2m > kMaxFieldDegree.
FieldContext build_field(const CodeLength& length);

/// Product of (X - xi^j) over j in C_i, checked to have binary coefficients.
BinaryPolynomial minimal_polynomial(const FieldContext& field, Residue i);

/// Product of the minimal polynomials of the cosets in the defining set.
/// Throws DegenerateCode when that set is all of Z_n.
BinaryPolynomial generator_polynomial(const FieldContext& field, const CodeLength& length, Residue delta, int b);

/// True iff X^{deg p} p(1/X) = p. A zero constant term is a domain error.
bool is_self_reciprocal(const BinaryPolynomial& p);

/// Systematic encoding X^r msg + (X^r msg mod g), r = deg g. The result has
/// n entries, lowest degree first.
BitVector encode(std::span<const std::uint8_t> msg, const BinaryPolynomial& g, Residue n);

/// Minimum nonzero weight of the code generated by g in GF(2)[X]/(X^n - 1),
/// by enumerating all 2^k - 1 nonzero messages. std::nullopt when k > k_cap
/// or k = 0.
std::optional<std::size_t> min_weight_exhaustive(const BinaryPolynomial& g, Residue n, unsigned k_cap = 20);

}  // namespace atlas

#endif  // ATLAS_GF2_CODEC_HPP
