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

#ifndef ATLAS_VERIFY_HPP
#define ATLAS_VERIFY_HPP

/**
 * @file verify.hpp
 * @brief Closed form versus brute force sweeps.
 *
 * A check id names what is compared:
 *
 *   classify     leader verdicts for every odd x up to the envelope
 *   ladder       the five largest leaders (every odd x above delta_5)
 *   cardinality  |C_x| for x up to the envelope and on the ladder
 *   dims         k and Bose distance on every odd delta of every row, b = 0, 1
 *   band         small-delta dimension formulas against brute force
 *
 * The numeric ids "3.1", "4.1", "5.1" (classify), "3.5", "4.5", "5.2"
 * (ladder), "3.6", "4.6", "5.3" (cardinality), "3.7", "4.7", "5.4" (dims)
 * and "2.4-band" are accepted too; the first digit pins the family of m.
 */

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace atlas {

class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint64_t kDefaultSeed = 20260101;
inline constexpr std::uint64_t kExhaustiveLimit = 10'000'000;
inline constexpr std::uint64_t kDefaultSampleSize = 10'000;

struct Mismatch {
    std::string quantity;
    std::uint64_t input = 0;
    std::int64_t closed_value = 0;
    std::int64_t oracle_value = 0;

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct VerifyOptions {
    /// Candidates drawn per range. Unset: exhaustive unless a sweep would
    /// exceed kExhaustiveLimit cases, then kDefaultSampleSize. 0 forces an
    /// exhaustive sweep.
    std::optional<std::uint64_t> sample;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 1;
};

struct VerificationReport {
    std::string theorem_id;
    unsigned m = 0;
    std::uint64_t cases_checked = 0;
    std::vector<Mismatch> mismatches;
    std::int64_t elapsed_ms = 0;
    bool sampled = false;
    std::uint64_t seed = kDefaultSeed;

    bool passed() const noexcept { return cases_checked > 0 && mismatches.empty(); }
};

std::vector<std::string> verification_ids();

/// Throws UsageError for an unknown id or an m the id does not cover.
VerificationReport verify(std::string_view theorem_id, unsigned m, const VerifyOptions& options = {});

nlohmann::json to_json(const VerificationReport& report);

/// Worker count from ATLAS_THREADS, or 1.
unsigned default_thread_count();

}  // namespace atlas

#endif  // ATLAS_VERIFY_HPP
