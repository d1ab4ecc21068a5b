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

#ifndef ATLAS_BINARY_POLYNOMIAL_HPP
#define ATLAS_BINARY_POLYNOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace atlas {

using BitVector = std::vector<std::uint8_t>;

/**
 * Polynomial over GF(2), coefficients packed little-endian into 64-bit
 * words (bit i of the packed stream is the coefficient of X^i). The zero
 * polynomial has no words and degree -1.
 */
class BinaryPolynomial {
   public:
    BinaryPolynomial() = default;

    static BinaryPolynomial from_word(std::uint64_t word);
    /// coeffs[i] is the coefficient of X^i; entries must be 0 or 1.
    static BinaryPolynomial from_bits(std::span<const std::uint8_t> coeffs);
    static BinaryPolynomial monomial(std::size_t exponent);
    /// Parses the `deg=D;hex=H` form produced by to_hex().
    static BinaryPolynomial from_hex(std::string_view text);

    bool is_zero() const noexcept { return words_.empty(); }
    long degree() const noexcept;
    bool coeff(std::size_t i) const noexcept;
    void set_coeff(std::size_t i, bool value);
    std::size_t weight() const noexcept;
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    /// Coefficient vector of exactly `length` entries; throws if deg >= length.
    BitVector to_bits(std::size_t length) const;

    /// `deg=D;hex=H`: H holds ceil((D+1)/8) bytes, byte j carrying the
    /// coefficients of X^{8j} .. X^{8j+7} in bits 0..7, written as two
    /// lowercase hex digits in increasing j. Zero is `deg=-1;hex=`.
    std::string to_hex() const;

    /// X^{deg} p(1/X).
    BinaryPolynomial reciprocal() const;

    BinaryPolynomial& operator+=(const BinaryPolynomial& rhs);
    BinaryPolynomial& operator*=(const BinaryPolynomial& rhs);
    BinaryPolynomial& operator%=(const BinaryPolynomial& rhs);
    /// Multiplication by X^k.
    BinaryPolynomial shifted(std::size_t k) const;

    friend BinaryPolynomial operator+(BinaryPolynomial lhs, const BinaryPolynomial& rhs) { return lhs += rhs; }
    friend BinaryPolynomial operator*(const BinaryPolynomial& lhs, const BinaryPolynomial& rhs);
    friend BinaryPolynomial operator%(BinaryPolynomial lhs, const BinaryPolynomial& rhs) { return lhs %= rhs; }
    friend BinaryPolynomial operator/(const BinaryPolynomial& lhs, const BinaryPolynomial& rhs);
    friend bool operator==(const BinaryPolynomial&, const BinaryPolynomial&) = default;

    /// (quotient, remainder); throws std::domain_error on a zero divisor.
    friend std::pair<BinaryPolynomial, BinaryPolynomial> divmod(const BinaryPolynomial& lhs,
                                                                const BinaryPolynomial& rhs);

   private:
    void trim();
    void xor_shifted(const BinaryPolynomial& src, std::size_t shift);

    std::vector<std::uint64_t> words_;
};

}  // namespace atlas

#endif  // ATLAS_BINARY_POLYNOMIAL_HPP
