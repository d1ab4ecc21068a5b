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

#include "atlas/binary_polynomial.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

namespace atlas {

BinaryPolynomial BinaryPolynomial::from_word(std::uint64_t word) {
    BinaryPolynomial p;
    if (word != 0) p.words_.push_back(word);
    return p;
}

BinaryPolynomial BinaryPolynomial::from_bits(std::span<const std::uint8_t> coeffs) {
    BinaryPolynomial p;
    p.words_.assign((coeffs.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] > 1) throw std::domain_error("binary coefficients must be 0 or 1");
        if (coeffs[i]) p.words_[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    p.trim();
    return p;
}

BinaryPolynomial BinaryPolynomial::monomial(std::size_t exponent) {
    BinaryPolynomial p;
    p.set_coeff(exponent, true);
    return p;
}

BinaryPolynomial BinaryPolynomial::from_hex(std::string_view text) {
    constexpr std::string_view deg_tag = "deg=";
    constexpr std::string_view hex_tag = ";hex=";
    const auto sep = text.find(hex_tag);
    if (!text.starts_with(deg_tag) || sep == std::string_view::npos) {
        throw std::invalid_argument("expected deg=D;hex=H");
    }
    long degree = 0;
    const auto deg_text = text.substr(deg_tag.size(), sep - deg_tag.size());
    auto [end, ec] = std::from_chars(deg_text.data(), deg_text.data() + deg_text.size(), degree);
    if (ec != std::errc{} || end != deg_text.data() + deg_text.size() || degree < -1) {
        throw std::invalid_argument("bad degree field");
    }
    const auto hex = text.substr(sep + hex_tag.size());
    const std::size_t bytes = degree < 0 ? 0 : static_cast<std::size_t>(degree) / 8 + 1;
    if (hex.size() != 2 * bytes) throw std::invalid_argument("hex field length does not match degree");

    BinaryPolynomial p;
    p.words_.assign((bytes + 7) / 8, 0);
    for (std::size_t j = 0; j < bytes; ++j) {
        unsigned value = 0;
        auto [e, err] = std::from_chars(hex.data() + 2 * j, hex.data() + 2 * j + 2, value, 16);
        if (err != std::errc{} || e != hex.data() + 2 * j + 2) throw std::invalid_argument("bad hex digit");
        p.words_[j / 8] |= std::uint64_t{value} << (8 * (j % 8));
    }
    p.trim();
    if (p.degree() != degree) throw std::invalid_argument("hex payload disagrees with the degree field");
    return p;
}

long BinaryPolynomial::degree() const noexcept {
    if (words_.empty()) return -1;
    return static_cast<long>(64 * (words_.size() - 1) + 63 - std::countl_zero(words_.back()));
}

bool BinaryPolynomial::coeff(std::size_t i) const noexcept {
    if (i / 64 >= words_.size()) return false;
    return (words_[i / 64] >> (i % 64)) & 1;
}

void BinaryPolynomial::set_coeff(std::size_t i, bool value) {
    if (i / 64 >= words_.size()) {
        if (!value) return;
        words_.resize(i / 64 + 1, 0);
    }
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    words_[i / 64] = value ? (words_[i / 64] | mask) : (words_[i / 64] & ~mask);
    trim();
}

std::size_t BinaryPolynomial::weight() const noexcept {
    std::size_t w = 0;
    for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
    return w;
}

BitVector BinaryPolynomial::to_bits(std::size_t length) const {
    if (degree() >= static_cast<long>(length)) throw std::length_error("polynomial does not fit the requested length");
    BitVector bits(length, 0);
    for (std::size_t i = 0; i < length; ++i) bits[i] = coeff(i) ? 1 : 0;
    return bits;
}

std::string BinaryPolynomial::to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    const long deg = degree();
    std::string out = "deg=" + std::to_string(deg) + ";hex=";
    if (deg < 0) return out;
    const std::size_t bytes = static_cast<std::size_t>(deg) / 8 + 1;
    for (std::size_t j = 0; j < bytes; ++j) {
        const auto byte = static_cast<unsigned>((words_[j / 8] >> (8 * (j % 8))) & 0xff);
        out += digits[byte >> 4];
        out += digits[byte & 0xf];
    }
    return out;
}

BinaryPolynomial BinaryPolynomial::reciprocal() const {
    BinaryPolynomial r;
    const long deg = degree();
    for (long i = 0; i <= deg; ++i) {
        if (coeff(static_cast<std::size_t>(i))) r.set_coeff(static_cast<std::size_t>(deg - i), true);
    }
    return r;
}

void BinaryPolynomial::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

void BinaryPolynomial::xor_shifted(const BinaryPolynomial& src, std::size_t shift) {
    if (src.is_zero()) return;
    const std::size_t word_shift = shift / 64;
    const unsigned bit_shift = shift % 64;
    const std::size_t needed = src.words_.size() + word_shift + 1;
    if (words_.size() < needed) words_.resize(needed, 0);
    for (std::size_t i = 0; i < src.words_.size(); ++i) {
        words_[i + word_shift] ^= src.words_[i] << bit_shift;
        if (bit_shift != 0) words_[i + word_shift + 1] ^= src.words_[i] >> (64 - bit_shift);
    }
    trim();
}

BinaryPolynomial BinaryPolynomial::shifted(std::size_t k) const {
    BinaryPolynomial r;
    r.xor_shifted(*this, k);
    return r;
}

BinaryPolynomial& BinaryPolynomial::operator+=(const BinaryPolynomial& rhs) {
    xor_shifted(rhs, 0);
    return *this;
}

BinaryPolynomial operator*(const BinaryPolynomial& lhs, const BinaryPolynomial& rhs) {
    // Walk the set bits of the sparser operand.
    const bool lhs_sparse = lhs.weight() <= rhs.weight();
    const BinaryPolynomial& sparse = lhs_sparse ? lhs : rhs;
    const BinaryPolynomial& dense = lhs_sparse ? rhs : lhs;
    BinaryPolynomial product;
    if (sparse.is_zero()) return product;
    product.words_.assign(lhs.words_.size() + rhs.words_.size() + 1, 0);
    for (std::size_t w = 0; w < sparse.words_.size(); ++w) {
        for (std::uint64_t bits = sparse.words_[w]; bits != 0; bits &= bits - 1) {
            const std::size_t shift = 64 * w + static_cast<std::size_t>(std::countr_zero(bits));
            const std::size_t word_shift = shift / 64;
            const unsigned bit_shift = shift % 64;
            for (std::size_t i = 0; i < dense.words_.size(); ++i) {
                product.words_[i + word_shift] ^= dense.words_[i] << bit_shift;
                if (bit_shift != 0) product.words_[i + word_shift + 1] ^= dense.words_[i] >> (64 - bit_shift);
            }
        }
    }
    product.trim();
    return product;
}

BinaryPolynomial& BinaryPolynomial::operator*=(const BinaryPolynomial& rhs) { return *this = *this * rhs; }

std::pair<BinaryPolynomial, BinaryPolynomial> divmod(const BinaryPolynomial& lhs, const BinaryPolynomial& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by the zero polynomial");
    BinaryPolynomial quotient;
    BinaryPolynomial rem = lhs;
    const long divisor_degree = rhs.degree();
    for (long d = rem.degree(); d >= divisor_degree; d = rem.degree()) {
        const auto shift = static_cast<std::size_t>(d - divisor_degree);
        quotient.set_coeff(shift, true);
        rem.xor_shifted(rhs, shift);
    }
    return {quotient, rem};
}

BinaryPolynomial& BinaryPolynomial::operator%=(const BinaryPolynomial& rhs) { return *this = divmod(*this, rhs).second; }

BinaryPolynomial operator/(const BinaryPolynomial& lhs, const BinaryPolynomial& rhs) { return divmod(lhs, rhs).first; }

}  // namespace atlas
