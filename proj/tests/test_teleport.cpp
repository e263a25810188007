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
#include "qrac/teleport.hpp"

using namespace qrac;

namespace {

double oracle_teleport_F(const Povm &povm) {
    std::vector<std::pair<int, int>> labels;
    for (const auto &l : povm.labels()) labels.emplace_back(l.a(), l.b());
    return oracle::teleport_F(povm.d(), povm.elements(), labels);
}

} // namespace

TEST(ConstrainedPovm, ElementsAreTransposedBellProjectors) {
    const int d = 3;
    const Povm p = constrained_povm(d, 5);
    ASSERT_EQ(p.size(), 5u);
    for (int i = 0; i < 4; ++i) {
        const auto label = BellLabel::from_index(d, i);
        const Eigen::VectorXcd v =
            oracle::kron(oracle::M::Identity(d, d),
                         oracle::x_power(d, label.a()) * oracle::z_power(d, label.b())) *
            oracle::bell(d);
        const oracle::M expected = (v * v.adjoint()).transpose();
        EXPECT_LT((p.elements()[i] - expected).cwiseAbs().maxCoeff(), 1e-12) << i;
    }
    EXPECT_EQ(p.labels().back().index(), 4);
}

TEST(ConstrainedPovm, CompletenessAndRange) {
    for (int d = 2; d <= 3; ++d) {
        for (int k = 1; k <= d * d; ++k) {
            const Povm p = constrained_povm(d, k);
            oracle::M sum = oracle::M::Zero(d * d, d * d);
            for (const auto &m : p.elements()) sum += m;
            EXPECT_LT((sum - oracle::M::Identity(d * d, d * d)).cwiseAbs().maxCoeff(), 1e-12);
        }
        EXPECT_THROW(constrained_povm(d, 0), std::out_of_range);
        EXPECT_THROW(constrained_povm(d, d * d + 1), std::out_of_range);
    }
}

TEST(Povm, RejectsInvalidElements) {
    const ComplexMatrix id = ComplexMatrix::Identity(4, 4);
    EXPECT_THROW(Povm(2, {0.5 * id}, {BellLabel(2, 0, 0)}), InvariantError);
    EXPECT_THROW(Povm(2, {2.0 * id, -1.0 * id}, {BellLabel(2, 0, 0), BellLabel(2, 0, 1)}),
                 InvariantError);
    EXPECT_THROW(Povm(2, {id}, {}), ShapeError);
    EXPECT_THROW(Povm(2, {ComplexMatrix::Identity(3, 3)}, {BellLabel(2, 0, 0)}), ShapeError);
    ComplexMatrix skew = id;
    skew(0, 1) = Complex(0.0, 0.1);
    EXPECT_THROW(Povm(2, {skew}, {BellLabel(2, 0, 0)}), InvariantError);
}

TEST(Correction, UndoesWeylUpToPhase) {
    for (int d = 2; d <= 4; ++d) {
        for (int i = 0; i < d * d; ++i) {
            const auto label = BellLabel::from_index(d, i);
            const ComplexMatrix p = teleport_correction(label) * weyl(d, label.a(), label.b());
            EXPECT_NEAR(std::abs(p.trace()) / d, 1.0, 1e-12);
        }
    }
}

TEST(ConstrainedTeleport, FidelityIsKOverDSquared) {
    for (int d = 2; d <= 3; ++d) {
        for (int k = 1; k <= d * d; ++k) {
            const auto r = constrained_teleport_fidelity(d, k);
            const double expected = static_cast<double>(k) / (d * d);
            EXPECT_NEAR(r.entanglement_fidelity_F, expected, 1e-10) << d << " " << k;
            EXPECT_NEAR(oracle_teleport_F(constrained_povm(d, k)), expected, 1e-10);
            EXPECT_EQ(*r.exact_F, Rational(k, d * d));
            EXPECT_EQ(*r.exact_f, (Rational(d) * Rational(k, d * d) + 1) / (d + 1));
        }
    }
}

TEST(ConstrainedTeleport, OutcomeContributionsPerElement) {
    // Each Bell projector contributes exactly 1/d^2; the complement carries the rest.
    const auto c = teleport_contributions(constrained_povm(3, 4));
    ASSERT_EQ(c.size(), 4u);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(c[i], 1.0 / 9.0, 1e-12);
    EXPECT_NEAR(c[3], 1.0 / 9.0, 1e-12);
}

TEST(ConstrainedTeleport, HaarAverageMatchesFormula) {
    for (int k : {1, 3, 4}) {
        const auto mc = transmission_fidelity_mc(constrained_teleport_channel(2, k), 2, 4000, 17, 2);
        const double f = (2.0 * k / 4.0 + 1.0) / 3.0;
        EXPECT_NEAR(mc.mean, f, 5.0 * mc.std_error + 1e-9) << k;
    }
}

TEST(ConstrainedTeleport, ChannelChecksInputDimension) {
    const auto ch = constrained_teleport_channel(2, 4);
    EXPECT_THROW(ch(Ket::basis(3, 0)), ShapeError);
}

TEST(Nsqrac, SplitIsOneHalf) {
    for (int d = 2; d <= 3; ++d) {
        for (int kp = 0; kp <= d * d; ++kp) {
            EXPECT_NEAR(nsqrac_split_strategy(d, kp).entanglement_fidelity_F, 0.5, 1e-10);
        }
    }
    EXPECT_THROW(nsqrac_split_strategy(2, 5), std::out_of_range);
}

TEST(Nsqrac, FavoredValue) {
    for (int d = 2; d <= 3; ++d) {
        const auto r = nsqrac_favored_strategy(d);
        EXPECT_NEAR(r.entanglement_fidelity_F, 0.5 * (1.0 + 1.0 / (d * d)), 1e-10);
        EXPECT_EQ(*r.exact_F, Rational(d * d + 1, 2 * d * d));
    }
}

TEST(Composite, DecompositionMatchesFullState) {
    const auto r = composite_nsqrac_via_qracse();
    EXPECT_NEAR(r.entanglement_fidelity_F, oracle::qubit_code_value(), 1e-10);
    ASSERT_TRUE(r.cross_check.has_value());
    EXPECT_NEAR(*r.cross_check, r.entanglement_fidelity_F, 1e-10);
    EXPECT_NEAR(r.transmission_fidelity_f, (2.0 * r.entanglement_fidelity_F + 1.0) / 3.0, 1e-12);
    EXPECT_FALSE(r.annotations.empty());
}

TEST(Composite, BothInputsEqual) {
    const auto f = composite_full_state_fidelities();
    EXPECT_NEAR(f[0], f[1], 1e-10);
}

TEST(Composite, QubitOnly) {
    EXPECT_THROW(composite_nsqrac_via_qracse(3), Unsupported);
}
