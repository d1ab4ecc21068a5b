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

#ifndef ATLAS_COSET_CORE_HPP
#define ATLAS_COSET_CORE_HPP

/**
 * @file coset_core.hpp
 * @brief Exact 2-cyclotomic coset arithmetic modulo n = 2^m + 1.
 *
 * Everything here is brute force: orbits are walked by repeated doubling
 * and leaders are detected with the half-orbit test
 *
 *     x is a leader  <=>  y_k >= x and n - y_k >= x  for 0 <= k < m,
 *
 * where y_k = x * 2^k mod n. The second half of the orbit is the negation
 * of the first because 2^m = -1 (mod n). The other modules of the library
 * are checked against these routines.
 */

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

namespace atlas {

using Residue = std::uint64_t;

// Residues stay below 2^62 + 2, so one doubling fits in 64 bits.
inline constexpr unsigned kMaxExponent = 62;

// Leader tables are cached only up to n = 2^24 + 1.
inline constexpr unsigned kTableMaxExponent = 24;

enum class Family { OddM, FourTPlus2, EightTPlus4, Unsupported };

std::string_view to_string(Family family) noexcept;

/// The pair (m, n = 2^m + 1) together with the residue class of m.
class CodeLength {
   public:
    /// Throws std::domain_error unless 2 <= m <= kMaxExponent. Verifies
    /// ord_n(2) = 2m by walking the orbit of 1.
    explicit CodeLength(unsigned m);

    unsigned m() const noexcept { return m_; }
    Residue n() const noexcept { return n_; }
    Family family() const noexcept { return family_; }
    /// m = 2t+1, 4t+2 or 8t+4 depending on the family; 0 when unsupported.
    unsigned t() const noexcept { return t_; }
    /// Multiplicative order of 2 modulo n, always 2m.
    unsigned order() const noexcept { return 2 * m_; }

    friend bool operator==(const CodeLength&, const CodeLength&) = default;

   private:
    unsigned m_;
    Residue n_;
    Family family_;
    unsigned t_;
};

struct CosetRecord {
    Residue leader = 0;
    unsigned size = 0;
    std::vector<Residue> elements;  // ascending

    friend bool operator==(const CosetRecord&, const CosetRecord&) = default;
};

struct DefiningSet {
    Residue n = 0;
    int b = 1;
    Residue delta = 0;
    std::uint64_t size = 0;
    std::vector<Residue> leaders;  // ascending, 0 first when b = 0
};

/// y * 2 mod n for y < n.
constexpr Residue double_mod(Residue y, Residue n) noexcept {
    y <<= 1;
    return y >= n ? y - n : y;
}

/// Orbit of x under doubling modulo an odd n (any odd n, not only 2^m + 1).
CosetRecord coset_of(Residue x, Residue n);
CosetRecord coset_of(Residue x, const CodeLength& length);

/// Full-orbit leader test for an arbitrary odd modulus.
bool is_coset_leader(Residue x, Residue n);
/// Half-orbit test; requires 1 <= x < n.
bool is_coset_leader(Residue x, const CodeLength& length);

/// Leaders in [lo, hi], ascending. lo > hi yields an empty result.
std::vector<CosetRecord> enumerate_leaders(const CodeLength& length, Residue lo, Residue hi);

/// The `count` largest leaders in [1, n-1], descending.
std::vector<CosetRecord> top_leaders(const CodeLength& length, std::size_t count);

/// C_1 u ... u C_{delta-1}, plus C_0 when b = 0. Requires 2 <= delta <= n.
DefiningSet defining_set(const CodeLength& length, Residue delta, int b);

/// |defining_set(length, delta, b)| without materializing the leader list.
std::uint64_t defining_size(const CodeLength& length, Residue delta, int b);

/// Largest delta' whose defining set equals that of delta. This is the
/// smallest coset leader >= delta, or n when there is none.
Residue bose_distance(const CodeLength& length, Residue delta, int b);

/**
 * Every coset leader in [1, n-1] with its coset size and running size sums.
 * Immutable once built; building is O(n) time and one bit per residue of
 * scratch memory.
 */
class CosetTable {
   public:
    explicit CosetTable(const CodeLength& length);

    const CodeLength& length() const noexcept { return length_; }
    /// Leaders in [1, n-1], ascending.
    const std::vector<Residue>& leaders() const noexcept { return leaders_; }
    bool is_leader(Residue x) const;
    /// Size of the coset led by x; 0 when x is not a leader.
    unsigned coset_size(Residue x) const;
    /// Sum of coset sizes over leaders in [1, delta-1].
    std::uint64_t sizes_below(Residue delta) const;
    /// Smallest leader >= x, or n when none exists.
    Residue next_leader(Residue x) const;

   private:
    CodeLength length_;
    std::vector<Residue> leaders_;
    std::vector<std::uint8_t> sizes_;
    std::vector<std::uint64_t> prefix_;  // prefix_[i] = sum of sizes_[0..i)
};

/// Process-wide lazily built table; nullptr when m > kTableMaxExponent.
/// Safe to call from several threads.
std::shared_ptr<const CosetTable> shared_coset_table(const CodeLength& length);

}  // namespace atlas

#endif  // ATLAS_COSET_CORE_HPP
