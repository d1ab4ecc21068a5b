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

#ifndef ATLAS_CLOSED_FORM_HPP
#define ATLAS_CLOSED_FORM_HPP

/**
 * @file closed_form.hpp
 * @brief Closed-form coset-leader facts for n = 2^m + 1, m = 2t+1, 4t+2, 8t+4.
 *
 * Nothing in this header walks an orbit. Each answer is produced from the
 * family parameter t alone so that it can be compared against coset_core.
 */

#include <array>
#include <cstdint>
#include <vector>

#include "atlas/coset_core.hpp"

namespace atlas {

enum class LeaderVerdict { Leader, NotLeader, OutOfTheoremRange, UnsupportedFamily };

std::string_view to_string(LeaderVerdict verdict) noexcept;

/// A maximal run of odd residues [lo, hi] with a single verdict.
struct DecidedRange {
    Residue lo = 0;
    Residue hi = 0;
    bool leader = false;
};

/// Smallest t for which the family's closed forms hold (5, 2 and 1).
unsigned family_floor(Family family);

/// True when the family is one of the three covered ones and t >= floor.
bool closed_form_supported(const CodeLength& length) noexcept;

/// Throws UnsupportedLength naming the violated condition.
void require_closed_form(const CodeLength& length);

/// Largest residue whose leader status is decided (2^{t+2}+7 and friends).
Residue envelope(const CodeLength& length);

/// The decided ranges, ascending. They tile the odd residues of
/// [1, envelope] exactly; a std::logic_error is thrown if they do not.
std::vector<DecidedRange> decided_ranges(const CodeLength& length);

/// Requires x odd and 1 <= x < n; even x raises std::domain_error.
LeaderVerdict classify_leader(Residue x, const CodeLength& length);

struct DeltaLadder {
    std::array<Residue, 5> deltas{};
    std::array<unsigned, 5> coset_sizes{};
};

/// The five largest coset leaders as given by the family's closed form.
DeltaLadder delta_ladder(const CodeLength& length);

/// |C_x| for x in [1, envelope] or x on the ladder; OutOfTheoremRange otherwise.
unsigned coset_cardinality(Residue x, const CodeLength& length);

enum class Scheme { IA1, IA2 };

std::string_view to_string(Scheme scheme) noexcept;

struct Interval {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    friend bool operator==(const Interval&, const Interval&) = default;
};

struct IntervalPartition {
    Scheme scheme = Scheme::IA1;
    unsigned t = 0;
    std::vector<Interval> intervals;  // intervals[s-1] is the s-th subinterval
};

/// Smallest admissible t (5 for IA1, 2 for IA2) and the largest one we build.
unsigned scheme_min_t(Scheme scheme) noexcept;
unsigned scheme_max_t(Scheme scheme) noexcept;

/// Runs the iterative construction: IA1 partitions [1, 2^{2t-5}] into
/// 2^{t-3} pieces, IA2 partitions [1, 3*2^{4t-6}] into 2^{t-2} pieces.
IntervalPartition ia_partition(Scheme scheme, unsigned t);

struct IntervalLocation {
    unsigned i = 0;
    std::uint64_t lambda = 0;

    friend bool operator==(const IntervalLocation&, const IntervalLocation&) = default;
};

/// (i, lambda) for the s-th subinterval: i is the lowest set bit of s,
/// lambda packs the higher bits of s in base 4 (IA1) or 16 (IA2).
IntervalLocation interval_locate(std::uint64_t s, unsigned t, Scheme scheme);

/// Rebuilds a subinterval from its location without running the iteration:
/// IA1: I_{2^i} + 2^{2i+3} lambda,  IA2: J_{2^i} + 3 * 2^{4i+6} lambda.
Interval interval_at(IntervalLocation loc, Scheme scheme);

}  // namespace atlas

#endif  // ATLAS_CLOSED_FORM_HPP
