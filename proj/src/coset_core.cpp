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

#include "atlas/coset_core.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "atlas/errors.hpp"

namespace atlas {

namespace {

void require_odd_modulus(Residue n) {
    if (n < 3 || n % 2 == 0 || n > (Residue{1} << 63)) {
        throw std::domain_error("modulus must be odd, >= 3 and <= 2^63, got " + std::to_string(n));
    }
}

void require_residue(Residue x, Residue n) {
    if (x >= n) {
        throw std::domain_error("residue " + std::to_string(x) + " out of range [0, " + std::to_string(n - 1) + "]");
    }
}

void require_offset(int b) {
    if (b != 0 && b != 1) {
        throw std::invalid_argument("b must be 0 or 1, got " + std::to_string(b));
    }
}

void require_delta(Residue delta, Residue n) {
    if (delta < 2 || delta > n) {
        throw std::domain_error("designed distance " + std::to_string(delta) + " outside [2, " + std::to_string(n) + "]");
    }
}

// Scan leaders in [1, delta-1] directly, without a table.
template <class Visit>
void for_each_leader_below(const CodeLength& length, Residue delta, Visit&& visit) {
    for (Residue x = 1; x < delta; x += 2) {
        if (is_coset_leader(x, length)) visit(x);
    }
}

}  // namespace

std::string_view to_string(Family family) noexcept {
    switch (family) {
        case Family::OddM: return "2t+1";
        case Family::FourTPlus2: return "4t+2";
        case Family::EightTPlus4: return "8t+4";
        case Family::Unsupported: return "unsupported";
    }
    return "unsupported";
}

CodeLength::CodeLength(unsigned m) : m_(m), n_(0), family_(Family::Unsupported), t_(0) {
    if (m < 2 || m > kMaxExponent) {
        throw std::domain_error("m must lie in [2, " + std::to_string(kMaxExponent) + "], got " + std::to_string(m));
    }
    n_ = (Residue{1} << m) + 1;
    if (m % 2 == 1) {
        family_ = Family::OddM;
        t_ = (m - 1) / 2;
    } else if (m % 4 == 2) {
        family_ = Family::FourTPlus2;
        t_ = (m - 2) / 4;
    } else if (m % 8 == 4) {
        family_ = Family::EightTPlus4;
        t_ = (m - 4) / 8;
    }

    unsigned orbit = 1;
    for (Residue y = double_mod(1, n_); y != 1; y = double_mod(y, n_)) ++orbit;
    if (orbit != 2 * m) {
        throw std::logic_error("ord_n(2) = " + std::to_string(orbit) + " differs from 2m for m = " + std::to_string(m));
    }
}

CosetRecord coset_of(Residue x, Residue n) {
    require_odd_modulus(n);
    require_residue(x, n);
    CosetRecord rec;
    Residue y = x;
    do {
        rec.elements.push_back(y);
        y = double_mod(y, n);
    } while (y != x);
    std::sort(rec.elements.begin(), rec.elements.end());
    rec.leader = rec.elements.front();
    rec.size = static_cast<unsigned>(rec.elements.size());
    return rec;
}

CosetRecord coset_of(Residue x, const CodeLength& length) { return coset_of(x, length.n()); }

bool is_coset_leader(Residue x, Residue n) {
    require_odd_modulus(n);
    require_residue(x, n);
    for (Residue y = double_mod(x, n); y != x; y = double_mod(y, n)) {
        if (y < x) return false;
    }
    return true;
}

bool is_coset_leader(Residue x, const CodeLength& length) {
    const Residue n = length.n();
    if (x == 0 || x >= n) {
        throw std::domain_error("leader test needs 1 <= x < n, got x = " + std::to_string(x));
    }
    if (x % 2 == 0) return false;
    Residue y = x;
    for (unsigned k = 0; k < length.m(); ++k) {
        if (y < x || n - y < x) return false;
        y = double_mod(y, n);
    }
    return true;
}

std::vector<CosetRecord> enumerate_leaders(const CodeLength& length, Residue lo, Residue hi) {
    std::vector<CosetRecord> out;
    if (lo > hi) return out;
    if (lo < 1 || hi >= length.n()) {
        throw std::domain_error("leader range must satisfy 1 <= lo <= hi < n");
    }
    for (Residue x = lo | 1; x <= hi; x += 2) {
        if (is_coset_leader(x, length)) out.push_back(coset_of(x, length));
    }
    return out;
}

std::vector<CosetRecord> top_leaders(const CodeLength& length, std::size_t count) {
    if (count == 0) throw std::domain_error("top_leaders needs count >= 1");
    std::vector<CosetRecord> out;
    for (Residue x = length.n() - 2; out.size() < count; x -= 2) {
        if (is_coset_leader(x, length)) out.push_back(coset_of(x, length));
        if (x == 1) break;
    }
    return out;
}

DefiningSet defining_set(const CodeLength& length, Residue delta, int b) {
    require_offset(b);
    require_delta(delta, length.n());
    DefiningSet ds;
    ds.n = length.n();
    ds.b = b;
    ds.delta = delta;
    if (b == 0) {
        ds.leaders.push_back(0);
        ds.size = 1;
    }
    if (auto table = shared_coset_table(length)) {
        const auto& all = table->leaders();
        auto end = std::lower_bound(all.begin(), all.end(), delta);
        ds.leaders.insert(ds.leaders.end(), all.begin(), end);
        ds.size += table->sizes_below(delta);
    } else {
        for_each_leader_below(length, delta, [&](Residue x) {
            ds.leaders.push_back(x);
            ds.size += coset_of(x, length).size;
        });
    }
    return ds;
}

std::uint64_t defining_size(const CodeLength& length, Residue delta, int b) {
    require_offset(b);
    require_delta(delta, length.n());
    std::uint64_t size = b == 0 ? 1 : 0;
    if (auto table = shared_coset_table(length)) {
        size += table->sizes_below(delta);
    } else {
        for_each_leader_below(length, delta, [&](Residue x) { size += coset_of(x, length).size; });
    }
    return size;
}

Residue bose_distance(const CodeLength& length, Residue delta, int b) {
    require_offset(b);
    require_delta(delta, length.n());
    if (auto table = shared_coset_table(length)) return table->next_leader(delta);
    for (Residue x = delta | 1; x < length.n(); x += 2) {
        if (is_coset_leader(x, length)) return x;
    }
    return length.n();
}

CosetTable::CosetTable(const CodeLength& length) : length_(length) {
    if (length.m() > kTableMaxExponent) {
        throw CapacityError("coset tables are limited to m <= " + std::to_string(kTableMaxExponent));
    }
    const Residue n = length.n();
    std::vector<bool> seen(n, false);
    for (Residue x = 1; x < n; ++x) {
        if (seen[x]) continue;
        unsigned size = 0;
        Residue y = x;
        do {
            seen[y] = true;
            ++size;
            y = double_mod(y, n);
        } while (y != x);
        leaders_.push_back(x);
        sizes_.push_back(static_cast<std::uint8_t>(size));
    }
    prefix_.resize(sizes_.size() + 1, 0);
    for (std::size_t i = 0; i < sizes_.size(); ++i) prefix_[i + 1] = prefix_[i] + sizes_[i];
}

bool CosetTable::is_leader(Residue x) const { return std::binary_search(leaders_.begin(), leaders_.end(), x); }

unsigned CosetTable::coset_size(Residue x) const {
    auto it = std::lower_bound(leaders_.begin(), leaders_.end(), x);
    if (it == leaders_.end() || *it != x) return 0;
    return sizes_[static_cast<std::size_t>(it - leaders_.begin())];
}

std::uint64_t CosetTable::sizes_below(Residue delta) const {
    auto it = std::lower_bound(leaders_.begin(), leaders_.end(), delta);
    return prefix_[static_cast<std::size_t>(it - leaders_.begin())];
}

Residue CosetTable::next_leader(Residue x) const {
    auto it = std::lower_bound(leaders_.begin(), leaders_.end(), x);
    return it == leaders_.end() ? length_.n() : *it;
}

std::shared_ptr<const CosetTable> shared_coset_table(const CodeLength& length) {
    if (length.m() > kTableMaxExponent) return nullptr;
    static std::mutex mutex;
    static std::map<unsigned, std::shared_ptr<const CosetTable>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[length.m()];
    if (!slot) slot = std::make_shared<const CosetTable>(length);
    return slot;
}

}  // namespace atlas
