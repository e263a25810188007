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
 * @file qracse.hpp
 * @brief Random access codes over one qudit plus a shared maximally entangled pair.
 *
 * Alice holds two strings a(0) = {a(0)_0, a(0)_1} and a(1) = {a(1)_0, a(1)_1}
 * of base-d digits. She looks up e0 = table^-1{a(0)_0, a(1)_0} and
 * e1 = table^-1{a(0)_1, a(1)_1} and applies X^{e0/d} Z^{e1/d} to her half of
 * |psi+>. Bob, wanting string c, projects onto
 * (X^{s b0 + o} Z^{s b1 + o} (x) I)|psi+> with s = (-1)^c and
 * o = (1-c)/2 - 1/(2d), and reports (b0, b1).
 */

#include <algorithm>
#include <array>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "codes.hpp"
#include "error.hpp"
#include "pauli.hpp"
#include "qcore.hpp"
#include "rational.hpp"

namespace qrac {

enum class Variant { two_strings, four_dits_pairs, four_dits_single, boolean_f };

inline std::string to_string(Variant v) {
    switch (v) {
    case Variant::two_strings:
        return "two_strings";
    case Variant::four_dits_pairs:
        return "pairs";
    case Variant::four_dits_single:
        return "single";
    case Variant::boolean_f:
        return "boolean_f";
    }
    return "unknown";
}

inline Variant variant_from_string(const std::string &s) {
    if (s == "two_strings" || s == "two-strings" || s == "strings") {
        return Variant::two_strings;
    }
    if (s == "pairs") {
        return Variant::four_dits_pairs;
    }
    if (s == "single") {
        return Variant::four_dits_single;
    }
    if (s == "boolean_f" || s == "f") {
        return Variant::boolean_f;
    }
    throw std::invalid_argument("unknown variant '" + s + "'");
}

/**
 * How a guess that covers only part of the measured pair is credited in the
 * four-bit tasks.
 *
 * pair_level: success only when the whole measured pair is decoded
 * correctly (times 1/2 for a guessed partner bit).
 * marginal: success whenever the requested bits themselves are right.
 */
enum class Accounting { pair_level, marginal };

inline std::string to_string(Accounting a) {
    return a == Accounting::pair_level ? "pair_level" : "marginal";
}

struct QracTask {
    int d = 2;
    EncodingTable table = builtin_table(2);
    Variant variant = Variant::two_strings;
    Accounting accounting = Accounting::pair_level;
    /// Eight 0/1 entries, only for Variant::boolean_f.
    std::vector<int> truth_table;
    RootBranch branch = RootBranch::principal;
};

/**
 * Success probabilities of one protocol run.
 *
 * per_string[c][v] is P(b = a(c) | a(c) = v) averaged over everything else
 * the task leaves free. For the four-bit tasks c indexes the requested bit
 * pair (or bit) and v its value.
 */
struct ProtocolReport {
    std::string name;
    int d = 2;
    Variant variant = Variant::two_strings;
    std::vector<std::string> choice_labels;
    std::vector<std::vector<double>> per_string;
    std::vector<double> per_choice;
    double p_avg = 0.0;
    double p_min = 0.0;
    std::optional<Rational> exact_p_avg;
    std::optional<Rational> exact_p_min;
    std::optional<Accounting> accounting;
    std::vector<std::string> annotations;
};

namespace detail {

/// Fills per_choice, p_avg and p_min from per_string.
inline void summarize(ProtocolReport &r) {
    r.per_choice.clear();
    double total = 0.0;
    std::size_t count = 0;
    double lo = std::numeric_limits<double>::infinity();
    for (const auto &row : r.per_string) {
        double s = 0.0;
        for (double p : row) {
            s += p;
            lo = std::min(lo, p);
        }
        r.per_choice.push_back(s / static_cast<double>(row.size()));
        total += s;
        count += row.size();
    }
    r.p_avg = total / static_cast<double>(count);
    r.p_min = lo;
}

inline double overlap_sq(const Ket &a, const Ket &b) { return std::norm(a.inner(b)); }

} // namespace detail

/// Alice's state for strings a0 = a(0) and a1 = a(1).
inline Ket encode(int d, const EncodingTable &table, const DigitPair &a0, const DigitPair &a1,
                  RootBranch branch = RootBranch::principal) {
    if (table.d() != d) {
        throw ShapeError("encoding table dimension does not match d");
    }
    const int e0 = table.index_of({a0.first, a1.first});
    const int e1 = table.index_of({a0.second, a1.second});
    return apply_to_bell_state(
        weyl(WeylExponent(d, Rational(e0, d)), WeylExponent(d, Rational(e1, d)), branch));
}

/// Exponent s*b + o of Bob's basis vector for choice c and digit b.
inline Rational bob_exponent(int d, int c, int b) {
    if (c != 0 && c != 1) {
        throw std::invalid_argument("choice must be 0 or 1");
    }
    const int s = c == 0 ? 1 : -1;
    return Rational(s * b) + Rational(1 - c, 2) - Rational(1, 2 * d);
}

/// Bob's d*d basis for choice c; element b0*d + b1 announces (b0, b1).
inline std::vector<Ket> measurement_basis(int d, int c,
                                          RootBranch branch = RootBranch::principal) {
    detail::require_dimension(d);
    std::vector<Ket> basis;
    basis.reserve(static_cast<std::size_t>(d) * d);
    for (int b0 = 0; b0 < d; ++b0) {
        for (int b1 = 0; b1 < d; ++b1) {
            basis.push_back(apply_to_bell_state(weyl(WeylExponent(d, bob_exponent(d, c, b0)),
                                                     WeylExponent(d, bob_exponent(d, c, b1)),
                                                     branch)));
        }
    }
    return basis;
}

/// The qubit-specific form with exponents (-1)^c b + (1-2c)/4.
inline std::vector<Ket> measurement_basis_d2(int c, RootBranch branch = RootBranch::principal) {
    if (c != 0 && c != 1) {
        throw std::invalid_argument("choice must be 0 or 1");
    }
    const int s = c == 0 ? 1 : -1;
    std::vector<Ket> basis;
    for (int b0 = 0; b0 < 2; ++b0) {
        for (int b1 = 0; b1 < 2; ++b1) {
            const Rational x = Rational(s * b0) + Rational(1 - 2 * c, 4);
            const Rational z = Rational(s * b1) + Rational(1 - 2 * c, 4);
            basis.push_back(apply_to_bell_state(
                weyl(WeylExponent(2, x), WeylExponent(2, z), branch)));
        }
    }
    return basis;
}

/**
 * Outcome probabilities for every encoded state, independent of the table.
 *
 * prob(e0, e1, c, b) = |<psi_b^c | psi_{e0,e1}>|^2. Scoring a table is then a
 * pure lookup, which is what makes table search cheap.
 */
class ProtocolEvaluator {
  public:
    explicit ProtocolEvaluator(int d, RootBranch branch = RootBranch::principal)
        : d_(d), branch_(branch) {
        detail::require_dimension(d);
        if (d > 8) {
            throw Unsupported("protocol evaluation is limited to d <= 8");
        }
        const int n = d * d;
        probs_.assign(static_cast<std::size_t>(n) * n * 2 * n, 0.0);
        std::array<std::vector<Ket>, 2> bases{measurement_basis(d, 0, branch),
                                              measurement_basis(d, 1, branch)};
        for (int e0 = 0; e0 < n; ++e0) {
            for (int e1 = 0; e1 < n; ++e1) {
                const Ket psi = apply_to_bell_state(weyl(
                    WeylExponent(d, Rational(e0, d)), WeylExponent(d, Rational(e1, d)), branch));
                for (int c = 0; c < 2; ++c) {
                    for (int b = 0; b < n; ++b) {
                        probs_[index(e0, e1, c, b)] = detail::overlap_sq(bases[c][b], psi);
                    }
                }
            }
        }
    }

    [[nodiscard]] int d() const { return d_; }
    [[nodiscard]] RootBranch branch() const { return branch_; }

    [[nodiscard]] double probability(int e0, int e1, int c, int b) const {
        return probs_[index(e0, e1, c, b)];
    }

    /// P(b = a(c) | a(0), a(1), c)
    [[nodiscard]] double success(const EncodingTable &t, const DigitPair &a0, const DigitPair &a1,
                                 int c) const {
        const int e0 = t.index_of({a0.first, a1.first});
        const int e1 = t.index_of({a0.second, a1.second});
        const DigitPair &target = c == 0 ? a0 : a1;
        return probability(e0, e1, c, target.first * d_ + target.second);
    }

    [[nodiscard]] ProtocolReport evaluate(const EncodingTable &t) const {
        if (t.d() != d_) {
            throw ShapeError("encoding table dimension does not match evaluator");
        }
        const int n = d_ * d_;
        ProtocolReport r;
        r.name = "qracse";
        r.d = d_;
        r.variant = Variant::two_strings;
        r.choice_labels = {"c=0", "c=1"};
        r.per_string.assign(2, std::vector<double>(static_cast<std::size_t>(n), 0.0));
        for (int v0 = 0; v0 < n; ++v0) {
            for (int v1 = 0; v1 < n; ++v1) {
                const DigitPair a0{v0 / d_, v0 % d_};
                const DigitPair a1{v1 / d_, v1 % d_};
                r.per_string[0][v0] += success(t, a0, a1, 0);
                r.per_string[1][v1] += success(t, a0, a1, 1);
            }
        }
        for (auto &row : r.per_string) {
            for (double &p : row) {
                p /= n;
            }
        }
        detail::summarize(r);
        return r;
    }

  private:
    [[nodiscard]] std::size_t index(int e0, int e1, int c, int b) const {
        const auto n = static_cast<std::size_t>(d_) * d_;
        return ((static_cast<std::size_t>(e0) * n + e1) * 2 + c) * n + b;
    }

    int d_;
    RootBranch branch_;
    std::vector<double> probs_;
};

/// Success of one input for the two-strings task, by direct state overlap.
inline std::vector<double> outcome_distribution(int d, const EncodingTable &table,
                                                const DigitPair &a0, const DigitPair &a1, int c,
                                                RootBranch branch = RootBranch::principal) {
    const Ket psi = encode(d, table, a0, a1, branch);
    std::vector<double> out;
    for (const auto &k : measurement_basis(d, c, branch)) {
        out.push_back(detail::overlap_sq(k, psi));
    }
    return out;
}

/// Exact value of the baseline that dense-codes one string and guesses the rest.
inline ProtocolReport trivial_strategy(int d, Variant variant) {
    detail::require_dimension(d);
    ProtocolReport r;
    r.name = "trivial";
    r.d = d;
    r.variant = variant;
    switch (variant) {
    case Variant::two_strings: {
        const int n = d * d;
        r.choice_labels = {"c=0", "c=1"};
        r.per_string = {std::vector<double>(n, 1.0), std::vector<double>(n, 1.0 / n)};
        r.exact_p_min = Rational(1, n);
        r.exact_p_avg = (Rational(1) + Rational(1, n)) / 2;
        break;
    }
    case Variant::four_dits_pairs: {
        if (d != 2) {
            throw Unsupported("four-bit variants are defined for d=2 only");
        }
        // a0 and a1 sent perfectly, a2 and a3 guessed.
        r.choice_labels = {"a0a1", "a2a3", "a0a3", "a1a2", "a0a2", "a1a3"};
        const std::array<Rational, 6> p{Rational(1),    Rational(1, 4), Rational(1, 2),
                                        Rational(1, 2), Rational(1, 2), Rational(1, 2)};
        for (const auto &v : p) {
            r.per_string.emplace_back(4, to_double(v));
        }
        r.exact_p_min = Rational(1, 4);
        r.exact_p_avg = (p[0] + p[1] + p[2] + p[3] + p[4] + p[5]) / 6;
        break;
    }
    case Variant::four_dits_single:
    case Variant::boolean_f: {
        if (d != 2) {
            throw Unsupported("four-bit variants are defined for d=2 only");
        }
        r.choice_labels = {"a0", "a1", "a2", "a3"};
        r.per_string = {{1.0, 1.0}, {1.0, 1.0}, {0.5, 0.5}, {0.5, 0.5}};
        r.exact_p_min = Rational(1, 2);
        r.exact_p_avg = Rational(3, 4);
        break;
    }
    }
    detail::summarize(r);
    r.p_avg = to_double(*r.exact_p_avg);
    r.p_min = to_double(*r.exact_p_min);
    return r;
}

/**
 * Simulates the two-strings baseline: Alice applies X^{a(0)_0} Z^{a(0)_1},
 * Bob measures in the Bell basis when c=0 and guesses uniformly when c=1.
 */
inline ProtocolReport simulate_dense_coding_baseline(int d) {
    detail::require_dimension(d);
    const int n = d * d;
    std::vector<Ket> bell;
    for (int i = 0; i < n; ++i) {
        bell.push_back(bell_basis_element(BellLabel::from_index(d, i)));
    }
    ProtocolReport r;
    r.name = "dense_coding_baseline";
    r.d = d;
    r.variant = Variant::two_strings;
    r.choice_labels = {"c=0", "c=1"};
    r.per_string.assign(2, std::vector<double>(n, 0.0));
    for (int v0 = 0; v0 < n; ++v0) {
        const Ket psi = apply_to_bell_state(weyl(d, v0 / d, v0 % d));
        for (int v1 = 0; v1 < n; ++v1) {
            r.per_string[0][v0] += detail::overlap_sq(bell[v0], psi);
            r.per_string[1][v1] += 1.0 / n;
        }
    }
    for (auto &row : r.per_string) {
        for (double &p : row) {
            p /= n;
        }
    }
    detail::summarize(r);
    return r;
}

// ---------------------------------------------------------------------------
// Four-bit tasks at d = 2. Bits (a0, a1, a2, a3) = (a(0)_0, a(0)_1, a(1)_0, a(1)_1).

struct FourBitMeasurement {
    /// X^{sx b0 + ox} Z^{sz b1 + oz}
    int sx;
    Rational ox;
    int sz;
    Rational oz;
    /// Which of the four bits outcome b0 and b1 announce.
    int bit_x;
    int bit_z;
};

/// The four measurement families: {a0,a1}, {a2,a3}, {a0,a3}, {a1,a2}.
inline std::array<FourBitMeasurement, 4> four_bit_measurements() {
    return {{
        {1, Rational(1, 4), 1, Rational(1, 4), 0, 1},
        {-1, Rational(-1, 4), -1, Rational(-1, 4), 2, 3},
        {1, Rational(1, 4), 1, Rational(-1, 4), 0, 3},
        {1, Rational(-1, 4), 1, Rational(1, 4), 2, 1},
    }};
}

namespace detail {

struct FourBitTables {
    // prob[m][input][b] with input = a0*8 + a1*4 + a2*2 + a3.
    std::array<std::array<std::array<double, 4>, 16>, 4> prob{};
};

inline FourBitTables four_bit_tables(const EncodingTable &table, RootBranch branch) {
    if (table.d() != 2) {
        throw Unsupported("four-bit variants are defined for d=2 only");
    }
    FourBitTables t;
    const auto ms = four_bit_measurements();
    for (std::size_t m = 0; m < ms.size(); ++m) {
        std::vector<Ket> basis;
        for (int b0 = 0; b0 < 2; ++b0) {
            for (int b1 = 0; b1 < 2; ++b1) {
                basis.push_back(apply_to_bell_state(
                    weyl(WeylExponent(2, Rational(ms[m].sx * b0) + ms[m].ox),
                         WeylExponent(2, Rational(ms[m].sz * b1) + ms[m].oz), branch)));
            }
        }
        for (int in = 0; in < 16; ++in) {
            const DigitPair a0{(in >> 3) & 1, (in >> 2) & 1};
            const DigitPair a1{(in >> 1) & 1, in & 1};
            const Ket psi = encode(2, table, a0, a1, branch);
            for (int b = 0; b < 4; ++b) {
                t.prob[m][in][b] = overlap_sq(basis[b], psi);
            }
        }
    }
    return t;
}

inline int bit_of(int input, int j) { return (input >> (3 - j)) & 1; }

/// P(both announced bits of measurement m are right) for one input.
inline double pair_correct(const FourBitTables &t, int m, int input) {
    const auto ms = four_bit_measurements();
    const int b = bit_of(input, ms[m].bit_x) * 2 + bit_of(input, ms[m].bit_z);
    return t.prob[m][input][b];
}

/// P(announced bit j of measurement m is right) for one input.
inline double bit_correct(const FourBitTables &t, int m, int input, int j) {
    const auto ms = four_bit_measurements();
    double p = 0.0;
    for (int b = 0; b < 4; ++b) {
        const int announced = ms[m].bit_x == j ? (b >> 1) : (b & 1);
        if (announced == bit_of(input, j)) {
            p += t.prob[m][input][b];
        }
    }
    return p;
}

/// Per-input success of decoding bit j with the measurement that carries it.
inline double single_bit_success(const FourBitTables &t, int input, int j, Accounting acc) {
    const int m = j < 2 ? 0 : 1;
    return acc == Accounting::pair_level ? pair_correct(t, m, input)
                                         : bit_correct(t, m, input, j);
}

inline ProtocolReport make_four_bit_report(const std::string &name, Variant v,
                                           std::vector<std::string> labels, Accounting acc) {
    ProtocolReport r;
    r.name = name;
    r.d = 2;
    r.variant = v;
    r.choice_labels = std::move(labels);
    r.accounting = acc;
    return r;
}

} // namespace detail

/**
 * Guess any two of four bits. Pairs {a0,a1}, {a2,a3}, {a0,a3}, {a1,a2} have
 * their own measurement. For the row and column pairs {a0,a2} and {a1,a3}
 * Bob measures the {a0,a1} family, keeps the bit belonging to the pair and
 * guesses the other.
 */
inline ProtocolReport run_four_bit_pairs(const EncodingTable &table,
                                         Accounting acc = Accounting::pair_level,
                                         RootBranch branch = RootBranch::principal) {
    const auto t = detail::four_bit_tables(table, branch);
    auto r = detail::make_four_bit_report("qracse_four_bit_pairs", Variant::four_dits_pairs,
                                          {"a0a1", "a2a3", "a0a3", "a1a2", "a0a2", "a1a3"}, acc);
    const std::array<std::array<int, 2>, 6> bits{{{0, 1}, {2, 3}, {0, 3}, {1, 2}, {0, 2}, {1, 3}}};
    r.per_string.assign(6, std::vector<double>(4, 0.0));
    for (int pair = 0; pair < 6; ++pair) {
        for (int in = 0; in < 16; ++in) {
            double p = 0.0;
            if (pair < 4) {
                p = detail::pair_correct(t, pair, in);
            } else {
                const int kept = bits[pair][0] == 0 ? 0 : 1; // a0 for {a0,a2}, a1 for {a1,a3}
                p = 0.5 * (acc == Accounting::pair_level ? detail::pair_correct(t, 0, in)
                                                         : detail::bit_correct(t, 0, in, kept));
            }
            const int value =
                detail::bit_of(in, bits[pair][0]) * 2 + detail::bit_of(in, bits[pair][1]);
            r.per_string[pair][value] += p / 4.0;
        }
    }
    detail::summarize(r);
    return r;
}

/// Guess any single bit of four.
inline ProtocolReport run_four_bit_single(const EncodingTable &table,
                                          Accounting acc = Accounting::pair_level,
                                          RootBranch branch = RootBranch::principal) {
    const auto t = detail::four_bit_tables(table, branch);
    auto r = detail::make_four_bit_report("qracse_four_bit_single", Variant::four_dits_single,
                                          {"a0", "a1", "a2", "a3"}, acc);
    r.per_string.assign(4, std::vector<double>(2, 0.0));
    for (int j = 0; j < 4; ++j) {
        for (int in = 0; in < 16; ++in) {
            r.per_string[j][detail::bit_of(in, j)] +=
                detail::single_bit_success(t, in, j, acc) / 8.0;
        }
    }
    detail::summarize(r);
    return r;
}

struct FourBitReports {
    ProtocolReport pairs;
    ProtocolReport single;
};

inline FourBitReports run_four_bit_variants(int d, Accounting acc = Accounting::pair_level) {
    if (d != 2) {
        throw Unsupported("four-bit variants are defined for d=2 only");
    }
    const auto table = builtin_table(2);
    return {run_four_bit_pairs(table, acc), run_four_bit_single(table, acc)};
}

/**
 * Boolean-function variant. Bit u_j = f(the other three bits in index order,
 * first one most significant). The induced bits are encoded as the two
 * strings (u0, u1) and (u2, u3) and any u_j is decoded with the single-bit
 * machinery. per_string[j][x] is the success for original input x.
 */
inline ProtocolReport f_qracse(int d, const std::vector<int> &truth_table,
                               Accounting acc = Accounting::pair_level,
                               RootBranch branch = RootBranch::principal) {
    if (d != 2) {
        throw Unsupported("the boolean-function variant is defined for d=2 only");
    }
    if (truth_table.size() != 8) {
        throw std::invalid_argument("truth table must have exactly 8 entries");
    }
    for (int v : truth_table) {
        if (v != 0 && v != 1) {
            throw std::invalid_argument("truth table entries must be 0 or 1");
        }
    }
    const auto t = detail::four_bit_tables(builtin_table(2), branch);
    auto r = detail::make_four_bit_report("f_qracse", Variant::boolean_f,
                                          {"u0", "u1", "u2", "u3"}, acc);
    r.per_string.assign(4, std::vector<double>(16, 0.0));
    for (int x = 0; x < 16; ++x) {
        int induced = 0;
        for (int j = 0; j < 4; ++j) {
            int args = 0;
            for (int k = 0; k < 4; ++k) {
                if (k != j) {
                    args = args * 2 + detail::bit_of(x, k);
                }
            }
            induced = induced * 2 + truth_table[args];
        }
        for (int j = 0; j < 4; ++j) {
            r.per_string[j][x] = detail::single_bit_success(t, induced, j, acc);
        }
    }
    detail::summarize(r);
    return r;
}

inline std::vector<int> truth_table_majority() { return {0, 0, 0, 1, 0, 1, 1, 1}; }
inline std::vector<int> truth_table_parity() { return {0, 1, 1, 0, 1, 0, 0, 1}; }
inline std::vector<int> truth_table_constant(int v) { return std::vector<int>(8, v); }

/// Runs the task described by `task`.
inline ProtocolReport run_protocol(const QracTask &task) {
    if (task.table.d() != task.d) {
        throw ShapeError("task table dimension does not match task d");
    }
    switch (task.variant) {
    case Variant::two_strings:
        return ProtocolEvaluator(task.d, task.branch).evaluate(task.table);
    case Variant::four_dits_pairs:
        if (task.d != 2) {
            throw Unsupported("four-bit variants are defined for d=2 only");
        }
        return run_four_bit_pairs(task.table, task.accounting, task.branch);
    case Variant::four_dits_single:
        if (task.d != 2) {
            throw Unsupported("four-bit variants are defined for d=2 only");
        }
        return run_four_bit_single(task.table, task.accounting, task.branch);
    case Variant::boolean_f:
        return f_qracse(task.d, task.truth_table, task.accounting, task.branch);
    }
    throw std::invalid_argument("unknown variant");
}

} // namespace qrac
