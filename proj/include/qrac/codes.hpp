// Copyright 2026 The qrac Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

/**
 * @file codes.hpp
 * @brief Single-distance (m-ary Gray) encoding tables over pairs of base-d digits.
 */

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "error.hpp"

namespace qrac {

struct DigitPair {
    int first = 0;
    int second = 0;

    friend auto operator<=>(const DigitPair &, const DigitPair &) = default;
};

/**
 * Ordered list of d*d digit pairs. Entry e is the pair encoded by index e.
 *
 * Construction only checks shape and digit range so that invalid tables can
 * still be inspected with validate().
 */
class EncodingTable {
  public:
    EncodingTable(int d, std::vector<DigitPair> entries) : d_(d), entries_(std::move(entries)) {
        detail::require_dimension(d);
        if (entries_.size() != static_cast<std::size_t>(d) * d) {
            throw ShapeError("encoding table for d=" + std::to_string(d) + " needs " +
                             std::to_string(d * d) + " entries, got " +
                             std::to_string(entries_.size()));
        }
        inverse_.assign(static_cast<std::size_t>(d) * d, -1);
        for (std::size_t e = 0; e < entries_.size(); ++e) {
            const auto &p = entries_[e];
            if (p.first < 0 || p.first >= d || p.second < 0 || p.second >= d) {
                throw ShapeError("digit out of range at entry " + std::to_string(e));
            }
            auto &slot = inverse_[static_cast<std::size_t>(p.first * d + p.second)];
            if (slot < 0) {
                slot = static_cast<int>(e);
            }
        }
    }

    [[nodiscard]] int d() const { return d_; }
    [[nodiscard]] std::size_t size() const { return entries_.size(); }
    [[nodiscard]] const std::vector<DigitPair> &entries() const { return entries_; }
    [[nodiscard]] const DigitPair &operator[](std::size_t e) const { return entries_[e]; }

    /// Encoding index of a pair (first occurrence); throws EncodingError if absent.
    [[nodiscard]] int index_of(const DigitPair &p) const {
        if (p.first < 0 || p.first >= d_ || p.second < 0 || p.second >= d_) {
            throw EncodingError("digit pair out of range");
        }
        const int e = inverse_[static_cast<std::size_t>(p.first * d_ + p.second)];
        if (e < 0) {
            throw EncodingError("pair {" + std::to_string(p.first) + "," +
                                std::to_string(p.second) + "} is not in the table");
        }
        return e;
    }

    friend bool operator==(const EncodingTable &a, const EncodingTable &b) {
        return a.d_ == b.d_ && a.entries_ == b.entries_;
    }
    friend bool operator<(const EncodingTable &a, const EncodingTable &b) {
        return a.d_ != b.d_ ? a.d_ < b.d_ : a.entries_ < b.entries_;
    }

  private:
    int d_;
    std::vector<DigitPair> entries_;
    std::vector<int> inverse_;
};

struct ValidationReport {
    bool bijective = false;
    bool single_distance = false;
    /// Pairs that occur more than once.
    std::vector<DigitPair> duplicates;
    /// Pairs that never occur.
    std::vector<DigitPair> missing;
    /// Step e -> e+1 (mod d*d) that does not change exactly one digit.
    std::vector<int> violating_steps;

    [[nodiscard]] bool valid() const { return bijective && single_distance; }
};

inline ValidationReport validate(const EncodingTable &table) {
    ValidationReport r;
    const int d = table.d();
    std::vector<int> count(static_cast<std::size_t>(d) * d, 0);
    for (const auto &p : table.entries()) {
        ++count[static_cast<std::size_t>(p.first * d + p.second)];
    }
    for (int i = 0; i < d * d; ++i) {
        if (count[i] == 0) {
            r.missing.push_back({i / d, i % d});
        } else if (count[i] > 1) {
            r.duplicates.push_back({i / d, i % d});
        }
    }
    r.bijective = r.missing.empty() && r.duplicates.empty();

    const auto n = static_cast<int>(table.size());
    for (int e = 0; e < n; ++e) {
        const auto &a = table[e];
        const auto &b = table[(e + 1) % n];
        const int changed = (a.first != b.first) + (a.second != b.second);
        if (changed != 1) {
            r.violating_steps.push_back(e);
        }
    }
    r.single_distance = r.violating_steps.empty();
    return r;
}

/**
 * Run-structured single-distance table for any d >= 2.
 *
 * Run r (entries r*d .. r*d+d-1) keeps first digit r while the second digit
 * cycles upward from (-r mod d). Consecutive runs therefore share the
 * boundary second digit, and the last entry {d-1, 0} wraps to {0, 0}.
 */
inline EncodingTable generate_single_distance(int d) {
    detail::require_dimension(d);
    std::vector<DigitPair> entries;
    entries.reserve(static_cast<std::size_t>(d) * d);
    for (int r = 0; r < d; ++r) {
        const int start = (d - r) % d;
        for (int j = 0; j < d; ++j) {
            entries.push_back({r, (start + j) % d});
        }
    }
    return EncodingTable(d, std::move(entries));
}

/// Published tables for d = 2, 3, 4.
inline EncodingTable builtin_table(int d) {
    switch (d) {
    case 2:
        return EncodingTable(2, {{0, 0}, {0, 1}, {1, 1}, {1, 0}});
    case 3:
        return EncodingTable(
            3, {{0, 0}, {0, 1}, {0, 2}, {1, 2}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {2, 0}});
    case 4:
        return EncodingTable(4, {{0, 0},
                                 {0, 1},
                                 {0, 2},
                                 {0, 3},
                                 {1, 3},
                                 {1, 0},
                                 {1, 1},
                                 {1, 2},
                                 {2, 2},
                                 {2, 3},
                                 {2, 0},
                                 {2, 1},
                                 {3, 1},
                                 {3, 2},
                                 {3, 3},
                                 {3, 0}});
    default:
        throw Unsupported("no built-in encoding table for d=" + std::to_string(d) +
                          "; use generate_single_distance or search_tables");
    }
}

/// Digits in reading order, for lexicographic tie-breaks and hashing.
inline std::vector<int> flatten(const EncodingTable &t) {
    std::vector<int> out;
    out.reserve(t.size() * 2);
    for (const auto &p : t.entries()) {
        out.push_back(p.first);
        out.push_back(p.second);
    }
    return out;
}

// JSON form: [[a0, a1], [a0, a1], ...]; d is implied by the length.

inline nlohmann::json to_json(const EncodingTable &t) {
    auto arr = nlohmann::json::array();
    for (const auto &p : t.entries()) {
        arr.push_back({p.first, p.second});
    }
    return arr;
}

inline EncodingTable table_from_json(const nlohmann::json &j) {
    if (!j.is_array()) {
        throw ShapeError("encoding table JSON must be an array of pairs");
    }
    const auto n = j.size();
    int d = 0;
    while (static_cast<std::size_t>(d) * d < n) {
        ++d;
    }
    if (static_cast<std::size_t>(d) * d != n) {
        throw ShapeError("encoding table length " + std::to_string(n) + " is not a square");
    }
    std::vector<DigitPair> entries;
    entries.reserve(n);
    for (const auto &item : j) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer()) {
            throw ShapeError("each encoding table entry must be [int, int]");
        }
        entries.push_back({item[0].get<int>(), item[1].get<int>()});
    }
    return EncodingTable(d, std::move(entries));
}

} // namespace qrac
