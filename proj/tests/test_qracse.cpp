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
#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qrac/qracse.hpp"

using namespace qrac;

namespace {

std::vector<std::pair<int, int>> as_pairs(const EncodingTable &t) {
    std::vector<std::pair<int, int>> out;
    for (const auto &p : t.entries()) out.emplace_back(p.first, p.second);
    return out;
}

const double kQubit = oracle::qubit_code_value();
const double kQubitMarginal = (2.0 + std::sqrt(2.0)) / 4.0;

} // namespace

TEST(MeasurementBasis, QubitFormMatchesGeneralForm) {
    for (int c = 0; c < 2; ++c) {
        const auto general = measurement_basis(2, c);
        const auto specific = measurement_basis_d2(c);
        ASSERT_EQ(general.size(), specific.size());
        for (std::size_t b = 0; b < general.size(); ++b) {
            EXPECT_LT((general[b].amplitudes() - specific[b].amplitudes()).cwiseAbs().maxCoeff(),
                      1e-12)
                << c << " " << b;
        }
    }
}

TEST(MeasurementBasis, OrthonormalForSmallD) {
    for (int d = 2; d <= 5; ++d) {
        for (int c = 0; c < 2; ++c) {
            const auto basis = measurement_basis(d, c);
            ASSERT_EQ(basis.size(), static_cast<std::size_t>(d * d));
            for (std::size_t i = 0; i < basis.size(); ++i) {
                for (std::size_t j = 0; j < basis.size(); ++j) {
                    EXPECT_NEAR(std::abs(basis[i].inner(basis[j])), i == j ? 1.0 : 0.0, 1e-12);
                }
            }
        }
    }
}

TEST(MeasurementBasis, ChoiceChecked) {
    EXPECT_THROW(measurement_basis(3, 2), std::invalid_argument);
    EXPECT_THROW(bob_exponent(3, -1, 0), std::invalid_argument);
}

TEST(Encode, StatesAreNormalized) {
    for (int d = 2; d <= 5; ++d) {
        const auto t = generate_single_distance(d);
        for (int v = 0; v < d * d; ++v) {
            const Ket k = encode(d, t, {v / d, v % d}, {v % d, (v + 1) % d});
            EXPECT_NEAR(k.amplitudes().norm(), 1.0, 1e-12);
        }
    }
}

TEST(Encode, MatchesOracleState) {
    const auto t = builtin_table(3);
    const Ket k = encode(3, t, {1, 2}, {0, 1});
    const int e0 = t.index_of({1, 0});
    const int e1 = t.index_of({2, 1});
    const auto expected = oracle::weyl_bell(3, e0 / 3.0, e1 / 3.0);
    EXPECT_LT((k.amplitudes() - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(OutcomeDistribution, SumsToOne) {
    for (int d = 2; d <= 4; ++d) {
        const auto t = generate_single_distance(d);
        for (int c = 0; c < 2; ++c) {
            const auto p = outcome_distribution(d, t, {0, 1}, {1, 1}, c);
            double s = 0.0;
            for (double x : p) {
                EXPECT_GE(x, -1e-12);
                s += x;
            }
            EXPECT_NEAR(s, 1.0, 1e-12);
        }
    }
}

TEST(Evaluator, AgreesWithOracle) {
    for (int d = 2; d <= 4; ++d) {
        const auto t = builtin_table(d);
        const auto r = ProtocolEvaluator(d).evaluate(t);
        const auto expected = oracle::two_strings_success(d, as_pairs(t));
        for (int c = 0; c < 2; ++c) {
            for (int v = 0; v < d * d; ++v) {
                EXPECT_NEAR(r.per_string[c][v], expected[c][v], 1e-10) << d << " " << c << " " << v;
            }
        }
    }
}

TEST(Evaluator, AgreesWithDirectOverlap) {
    const int d = 3;
    const auto t = generate_single_distance(d);
    const ProtocolEvaluator eval(d);
    for (int v0 = 0; v0 < 9; ++v0) {
        for (int v1 = 0; v1 < 9; v1 += 4) {
            const DigitPair a0{v0 / 3, v0 % 3};
            const DigitPair a1{v1 / 3, v1 % 3};
            for (int c = 0; c < 2; ++c) {
                const auto p = outcome_distribution(d, t, a0, a1, c);
                const DigitPair &target = c == 0 ? a0 : a1;
                EXPECT_NEAR(eval.success(t, a0, a1, c), p[target.first * 3 + target.second],
                            1e-12);
            }
        }
    }
}

TEST(Evaluator, QubitValueIsUniform) {
    const auto r = ProtocolEvaluator(2).evaluate(builtin_table(2));
    for (const auto &row : r.per_string) {
        for (double p : row) EXPECT_NEAR(p, kQubit, 1e-12);
    }
    EXPECT_NEAR(r.per_choice[0], r.per_choice[1], 1e-12);
    EXPECT_NEAR(r.p_avg, kQubit, 1e-12);
    EXPECT_NEAR(r.p_min, kQubit, 1e-12);
}

TEST(Evaluator, QutritAndQuartitValues) {
    const auto r3 = ProtocolEvaluator(3).evaluate(builtin_table(3));
    EXPECT_NEAR(r3.per_choice[0], 0.653280, 5e-6);
    EXPECT_NEAR(r3.per_choice[1], 0.424029, 5e-6);
    EXPECT_NEAR(r3.p_avg, 0.538654, 5e-6);
    const auto r4 = ProtocolEvaluator(4).evaluate(builtin_table(4));
    EXPECT_NEAR(r4.per_choice[0], 0.628678, 5e-6);
    EXPECT_NEAR(r4.per_choice[1], 0.260757, 5e-6);
}

TEST(Evaluator, BeatsTrivialOnMinimum) {
    for (int d = 2; d <= 5; ++d) {
        const auto t = d <= 4 ? builtin_table(d) : generate_single_distance(d);
        const auto r = ProtocolEvaluator(d).evaluate(t);
        EXPECT_GT(r.p_min, 1.0 / (d * d)) << d;
        EXPECT_LE(r.p_min, r.p_avg + 1e-15);
        for (const auto &row : r.per_string)
            for (double p : row) {
                EXPECT_GE(p, 0.0);
                EXPECT_LE(p, 1.0 + 1e-12);
            }
    }
}

TEST(Evaluator, DimensionLimits) {
    EXPECT_THROW(ProtocolEvaluator(9), Unsupported);
    EXPECT_THROW(ProtocolEvaluator(1), InvalidDimension);
    EXPECT_THROW(ProtocolEvaluator(3).evaluate(builtin_table(2)), ShapeError);
}

TEST(Trivial, ExactValues) {
    for (int d = 2; d <= 5; ++d) {
        const auto r = trivial_strategy(d, Variant::two_strings);
        EXPECT_EQ(*r.exact_p_min, Rational(1, d * d));
        EXPECT_EQ(*r.exact_p_avg, Rational(d * d + 1, 2 * d * d));
    }
    const auto pairs = trivial_strategy(2, Variant::four_dits_pairs);
    EXPECT_EQ(*pairs.exact_p_min, Rational(1, 4));
    EXPECT_EQ(*pairs.exact_p_avg, Rational(13, 24));
    const auto single = trivial_strategy(2, Variant::four_dits_single);
    EXPECT_EQ(*single.exact_p_avg, Rational(3, 4));
    EXPECT_THROW(trivial_strategy(3, Variant::four_dits_pairs), Unsupported);
}

TEST(Trivial, DenseCodingSimulationMatches) {
    for (int d = 2; d <= 4; ++d) {
        const auto sim = simulate_dense_coding_baseline(d);
        const auto exact = trivial_strategy(d, Variant::two_strings);
        EXPECT_NEAR(sim.p_avg, exact.p_avg, 1e-12) << d;
        EXPECT_NEAR(sim.p_min, exact.p_min, 1e-12) << d;
        EXPECT_NEAR(sim.per_choice[0], 1.0, 1e-12);
    }
}

TEST(FourBit, PairsPairLevel) {
    const auto r = run_four_bit_variants(2).pairs;
    ASSERT_EQ(r.per_choice.size(), 6u);
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(r.per_choice[i], kQubit, 1e-10) << i;
    for (int i = 4; i < 6; ++i) EXPECT_NEAR(r.per_choice[i], kQubit / 2, 1e-10) << i;
    EXPECT_NEAR(r.p_avg, (4 * kQubit + kQubit) / 6, 1e-10);
    EXPECT_NEAR(r.p_min, kQubit / 2, 1e-10);
    EXPECT_EQ(r.choice_labels[3], "a1a2");
}

TEST(FourBit, PairsMarginal) {
    const auto r = run_four_bit_variants(2, Accounting::marginal).pairs;
    EXPECT_NEAR(r.p_min, kQubitMarginal / 2, 1e-10);
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(r.per_choice[i], kQubit, 1e-10);
}

TEST(FourBit, Single) {
    EXPECT_NEAR(run_four_bit_variants(2).single.p_min, kQubit, 1e-10);
    const auto m = run_four_bit_variants(2, Accounting::marginal).single;
    EXPECT_NEAR(m.p_min, kQubitMarginal, 1e-10);
    EXPECT_NEAR(m.p_avg, kQubitMarginal, 1e-10);
}

TEST(FourBit, EachMeasurementAnnouncesItsPairFaithfully) {
    // Family m decodes its own pair with the qubit code value for every input.
    const auto t = detail::four_bit_tables(builtin_table(2), RootBranch::principal);
    for (int m = 0; m < 4; ++m)
        for (int in = 0; in < 16; ++in)
            EXPECT_NEAR(detail::pair_correct(t, m, in), kQubit, 1e-10) << m << " " << in;
}

TEST(FourBit, QubitOnly) {
    EXPECT_THROW(run_four_bit_variants(3), Unsupported);
    EXPECT_THROW(run_four_bit_pairs(builtin_table(3)), Unsupported);
}

TEST(BooleanF, KnownFunctions) {
    for (const auto &tt : {truth_table_majority(), truth_table_parity(), truth_table_constant(0),
                           truth_table_constant(1)}) {
        const auto r = f_qracse(2, tt);
        EXPECT_NEAR(r.p_avg, kQubit, 1e-10);
        EXPECT_NEAR(r.p_min, kQubit, 1e-10);
        const auto m = f_qracse(2, tt, Accounting::marginal);
        EXPECT_NEAR(m.p_min, kQubitMarginal, 1e-10);
    }
}

TEST(BooleanF, MalformedTruthTables) {
    EXPECT_THROW(f_qracse(2, {0, 1, 1}), std::invalid_argument);
    EXPECT_THROW(f_qracse(2, {0, 1, 1, 0, 1, 0, 0, 2}), std::invalid_argument);
    EXPECT_THROW(f_qracse(3, truth_table_majority()), Unsupported);
}

TEST(RunProtocol, Dispatch) {
    QracTask task;
    task.d = 3;
    task.table = builtin_table(3);
    EXPECT_NEAR(run_protocol(task).p_min, 0.424029, 5e-6);
    task.d = 2;
    task.table = builtin_table(2);
    task.variant = Variant::boolean_f;
    task.truth_table = truth_table_majority();
    EXPECT_EQ(run_protocol(task).variant, Variant::boolean_f);
    task.variant = Variant::four_dits_pairs;
    EXPECT_EQ(run_protocol(task).per_choice.size(), 6u);
    task.table = builtin_table(3);
    EXPECT_THROW(run_protocol(task), ShapeError);
}

TEST(Variant, StringRoundTrip) {
    for (auto v : {Variant::two_strings, Variant::four_dits_pairs, Variant::four_dits_single,
                   Variant::boolean_f}) {
        EXPECT_EQ(variant_from_string(to_string(v)), v);
    }
    EXPECT_EQ(variant_from_string("f"), Variant::boolean_f);
    EXPECT_THROW(variant_from_string("triples"), std::invalid_argument);
}
