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

#ifndef ATLAS_BCH_PARAMS_HPP
#define ATLAS_BCH_PARAMS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "atlas/coset_core.hpp"

namespace atlas {

/**
 * Parameters of the binary BCH code of length n with defining set
 * defining_set(length, delta, b). For b = 1 this is C(n,2,delta,1); for
 * b = 0 it is C(n,2,delta+1,0), whose defining set adds C_0.
 */
struct CodeSpec {
    CodeLength length;
    int b = 1;
    Residue delta = 0;
    std::uint64_t dimension = 0;
    std::uint64_t defining_size = 0;
    Residue bose = 0;
    /// delta for b = 1, 2*delta for b = 0.
    std::uint64_t distance_bound = 0;
};

/// Exact parameters from coset enumeration; any delta parity.
CodeSpec dimension_brute(const CodeLength& length, Residue delta, int b);

/// How a closed-form row computes k (before the b = 0 shift of -1).
enum class RowKind {
    Affine,    // k = n - m*delta + c*m
    Flat,      // k = n - m*anchor + c*m
    Ladder,    // k = 2m(i-1) + c
    Terminal,  // k = 1
};

struct DimensionRow {
    Residue lo = 0;  // inclusive, odd
    Residue hi = 0;  // inclusive
    RowKind kind = RowKind::Affine;
    std::int64_t c = 0;
    Residue anchor = 0;       // Flat rows only
    unsigned ladder_index = 0;  // Ladder rows: i in 1..4
    /// Distance the row states; 0 means "delta itself".
    Residue bose = 0;
};

/// All rows of the family's dimension table for offset b, in ascending delta.
std::vector<DimensionRow> dimension_rows(const CodeLength& length, int b);

/// Closed-form parameters for odd delta. Throws ParityError for even delta
/// and OutOfTheoremRange when delta falls in no row.
CodeSpec dimension_closed(const CodeLength& length, Residue delta, int b);

struct DimensionBound {
    std::int64_t value = 0;
    bool vacuous = false;  // value <= 0
};

/// n - ord*(delta-1), or n - ord*(delta-1)/2 for narrow-sense binary codes
/// with odd delta.
DimensionBound dim_lower_bound_generic(std::uint64_t n, std::uint64_t ord, std::uint64_t delta,
                                       bool narrow_binary_odd);

/// k = n - ord*ceil((delta-1)(1-1/q)) inside its applicability window,
/// std::nullopt outside it. Requires gcd(q, n) = 1.
std::optional<std::int64_t> dim_aly(std::uint64_t n, std::uint64_t q, std::uint64_t ord, std::uint64_t delta);

/// Known small-delta dimension formulas for n = 2^m + 1 (q = 2):
///   b = 1, 2 <= delta <= 2^{h+1}, h = floor((m-1)/2);
///   b = 0, 2 <= delta <= 2^h + 2.
/// std::nullopt outside the window or for m < 3.
std::optional<std::int64_t> dim_small_delta(const CodeLength& length, Residue delta, int b);

}  // namespace atlas

#endif  // ATLAS_BCH_PARAMS_HPP
