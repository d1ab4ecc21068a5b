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

// Reference implementations for the tests, written from the definitions
// with std::set and no shortcuts. Slow on purpose; keep n small.

#ifndef ATLAS_TESTS_ORACLE_HPP
#define ATLAS_TESTS_ORACLE_HPP

#include <cstdint>
#include <set>

namespace oracle {

inline std::set<std::uint64_t> coset(std::uint64_t x, std::uint64_t n) {
    std::set<std::uint64_t> out;
    std::uint64_t y = x % n;
    while (out.insert(y).second) y = (2 * y) % n;
    return out;
}

inline bool is_leader(std::uint64_t x, std::uint64_t n) { return *coset(x, n).begin() == x; }

// Union of C_j for j in [lo, delta - 1].
inline std::set<std::uint64_t> defining_set(std::uint64_t n, std::uint64_t delta, int b) {
    std::set<std::uint64_t> out;
    for (std::uint64_t j = (b == 0 ? 0 : 1); j < delta; ++j) {
        if (out.count(j)) continue;
        const auto c = coset(j, n);
        out.insert(c.begin(), c.end());
    }
    return out;
}

// Largest delta' with T_{delta'} = T_delta: the first positive residue
// missing from T_delta, or n when every nonzero residue is present.
inline std::uint64_t bose(std::uint64_t n, std::uint64_t delta) {
    const auto t = defining_set(n, delta, 1);
    for (std::uint64_t j = 1; j < n; ++j) {
        if (!t.count(j)) return j;
    }
    return n;
}

}  // namespace oracle

#endif  // ATLAS_TESTS_ORACLE_HPP
