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
#include "qrac/bounds.hpp"

using namespace qrac;

TEST(Werner, OneToTwoQubit) {
    EXPECT_EQ(werner_fidelity(CloningParams(1, 2, 2)), Rational(5, 6));
    EXPECT_EQ(werner_fidelity(CloningParams(3, 3, 4)), Rational(1));
}

TEST(Werner, AgreesWithSymmetricBoundThroughConversion) {
    for (int d = 2; d <= 6; ++d) {
        for (int n = 1; n <= 8; ++n) {
            EXPECT_EQ(f_from_F(symmetric_bound(d, n), d), werner_fidelity(CloningParams(1, n, d)))
                << d << " " << n;
        }
    }
}

TEST(Werner, DecreasesWithCopies) {
    for (int d = 2; d <= 4; ++d)
        for (int n2 = 2; n2 <= 6; ++n2)
            EXPECT_LT(werner_fidelity(CloningParams(1, n2, d)),
                      werner_fidelity(CloningParams(1, n2 - 1, d)));
}

TEST(Werner, ParameterChecks) {
    EXPECT_THROW(CloningParams(0, 2, 2), std::invalid_argument);
    EXPECT_THROW(CloningParams(3, 2, 2), std::invalid_argument);
    EXPECT_THROW(CloningParams(1, 2, 1), InvalidDimension);
}

TEST(SymmetricBound, Values) {
    EXPECT_EQ(symmetric_bound(2, 2), Rational(3, 4));
    EXPECT_EQ(symmetric_bound(2, 3), Rational(2, 3));
    EXPECT_EQ(symmetric_bound(3, 1), Rational(1));
    EXPECT_THROW(symmetric_bound(2, 0), std::invalid_argument);
}

TEST(SymmetricBound, SaturatesConstraint) {
    for (int d = 2; d <= 5; ++d) {
        for (int n = 1; n <= 6; ++n) {
            const double f = to_double(symmetric_bound(d, n));
            EXPECT_NEAR(kay_constraint_residual(std::vector<double>(n, f), d), 0.0, 1e-12);
        }
    }
}

TEST(KayResidual, Checks) {
    EXPECT_THROW(kay_constraint_residual({}, 2), std::invalid_argument);
    EXPECT_THROW(kay_constraint_residual({1.2}, 2), std::invalid_argument);
    // one perfect copy and one useless one is attainable
    EXPECT_GE(kay_constraint_residual({1.0, 0.25}, 2), -1e-12);
    EXPECT_LT(kay_constraint_residual({1.0, 1.0}, 2), 0.0);
}

TEST(AsymClosedForm, Endpoints) {
    for (int d = 2; d <= 5; ++d) {
        EXPECT_NEAR(asym_closed_form_n2(0.0, d), 1.0, 1e-15);
        EXPECT_NEAR(asym_closed_form_n2(1.0, d), 1.0, 1e-15);
        EXPECT_NEAR(asym_closed_form_n2(0.5, d), to_double(symmetric_bound(d, 2)), 1e-12);
    }
    EXPECT_THROW(asym_closed_form_n2(1.5, 2), std::invalid_argument);
}

TEST(AsymOptimize, MatchesClosedFormForTwo) {
    for (int d = 2; d <= 3; ++d) {
        for (int i = 0; i <= 10; ++i) {
            const double p = i / 10.0;
            const auto r = asym_optimize(AsymSpec(d, {p, 1.0 - p}), 16, 3);
            EXPECT_NEAR(r.value, asym_closed_form_n2(p, d), 1e-7) << d << " " << p;
            ASSERT_EQ(r.point.size(), 2u);
            // point holds sqrt(F_i); the maximizer sits on the constraint surface
            std::vector<double> F;
            for (double x : r.point) F.push_back(std::min(1.0, x * x));
            EXPECT_NEAR(kay_constraint_residual(F, d), 0.0, 1e-8);
        }
    }
}

TEST(AsymOptimize, UniformThreeIsSymmetric) {
    for (int d = 2; d <= 3; ++d) {
        const double third = 1.0 / 3.0;
        const auto r = asym_optimize(AsymSpec(d, {third, third, 1.0 - 2.0 * third}), 16, 5);
        EXPECT_NEAR(r.value, to_double(symmetric_bound(d, 3)), 1e-7) << d;
    }
}

TEST(AsymOptimize, NoWorseThanFavoringOne) {
    // Giving everything to one input is feasible, so the optimum is at least max p_i.
    const auto r = asym_optimize(AsymSpec(2, {0.7, 0.2, 0.1}), 16, 9);
    const double favored = 0.7 + 0.3 * 0.25;
    EXPECT_GE(r.value, favored - 1e-9);
}

TEST(AsymOptimize, Deterministic) {
    const AsymSpec s(3, {0.5, 0.3, 0.2});
    EXPECT_EQ(asym_optimize(s, 8, 42).value, asym_optimize(s, 8, 42).value);
}

TEST(AsymSpec, Validation) {
    EXPECT_THROW(AsymSpec(2, {}), std::invalid_argument);
    EXPECT_THROW(AsymSpec(2, {0.5, 0.6}), std::invalid_argument);
    EXPECT_THROW(AsymSpec(2, {-0.1, 1.1}), std::invalid_argument);
    EXPECT_THROW(asym_optimize(AsymSpec(2, {1.0})), std::invalid_argument);
}

TEST(FullyEntangledFraction, KnownStates) {
    for (int d = 2; d <= 3; ++d) {
        const auto bell = DensityMatrix::from_ket(bell_state(d));
        EXPECT_NEAR(fully_entangled_fraction(bell), 1.0, 1e-9) << d;
        const auto product = DensityMatrix::from_ket(Ket::basis(d * d, 0));
        EXPECT_NEAR(fully_entangled_fraction(product), 1.0 / d, 1e-9) << d;
        const auto mixed = DensityMatrix::maximally_mixed(d * d);
        EXPECT_NEAR(fully_entangled_fraction(mixed), 1.0 / (d * d), 1e-9) << d;
    }
    EXPECT_TRUE(fully_entangled_fraction_is_exact(2));
    EXPECT_FALSE(fully_entangled_fraction_is_exact(3));
}

TEST(FullyEntangledFraction, LocallyRotatedBellState) {
    const ComplexMatrix u = weyl(3, 0.3, 1.7) * dft(3);
    EXPECT_NEAR(fully_entangled_fraction(DensityMatrix::from_ket(apply_to_bell_state(u))), 1.0,
                1e-9);
}

TEST(FullyEntangledFraction, QubitDominatesSampledMaximallyEntangledStates) {
    // The exact value must upper-bound every overlap with (U (x) I)|phi+>
    // and be approached by the best of many samples.
    unsigned state = 7;
    for (int trial = 0; trial < 5; ++trial) {
        const oracle::M rho = oracle::random_density(4, state);
        const double fef = fully_entangled_fraction(DensityMatrix(rho));
        double best = 0.0;
        Rng rng(trial);
        for (int s = 0; s < 4000; ++s) {
            const Ket k = haar_random_ket(2, rng);
            // SU(2) element with first column k; global phases do not change the overlap
            ComplexMatrix u(2, 2);
            u << k[0], -std::conj(k[1]), k[1], std::conj(k[0]);
            const Eigen::VectorXcd w = oracle::kron(u, oracle::M::Identity(2, 2)) * oracle::bell(2);
            best = std::max(best, (w.adjoint() * rho * w)(0, 0).real());
        }
        EXPECT_GE(fef, best - 1e-12);
        EXPECT_NEAR(fef, best, 1e-2);
    }
}

TEST(FullyEntangledFraction, RejectsNonSquareDimension) {
    EXPECT_THROW(fully_entangled_fraction(DensityMatrix::maximally_mixed(6)), InvalidDimension);
}

TEST(Monogamy, PureThreeQubitStatesRespectConstraint) {
    EXPECT_GE(monogamy_min_residual(200, 11), -1e-9);
}
