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
 * @file bounds.hpp
 * @brief Monogamy-based upper bounds on sending one of N qudits with
 * bounded entanglement: cloning fidelities, the symmetric bound, the
 * fidelity constraint and the asymmetric optimization.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "pauli.hpp"
#include "qcore.hpp"
#include "random.hpp"
#include "rational.hpp"

namespace qrac {

struct CloningParams {
    int n1;
    int n2;
    int d;

    CloningParams(int n1_, int n2_, int d_) : n1(n1_), n2(n2_), d(d_) {
        detail::require_dimension(d);
        if (n1 < 1 || n2 < n1) {
            throw std::invalid_argument("cloning needs 1 <= n1 <= n2");
        }
    }
};

/// Input probabilities p_1..p_N for which of the N qudits is requested.
struct AsymSpec {
    int d;
    std::vector<double> probabilities;

    AsymSpec(int d_, std::vector<double> p) : d(d_), probabilities(std::move(p)) {
        detail::require_dimension(d);
        if (probabilities.empty()) {
            throw std::invalid_argument("probability list is empty");
        }
        double s = 0.0;
        for (double x : probabilities) {
            if (!std::isfinite(x) || x < 0.0) {
                throw std::invalid_argument("probabilities must be finite and nonnegative");
            }
            s += x;
        }
        if (std::abs(s - 1.0) > 1e-12) {
            throw std::invalid_argument("probabilities must sum to 1");
        }
    }

    [[nodiscard]] int n() const { return static_cast<int>(probabilities.size()); }
};

struct BoundResult {
    std::string label;
    /// closed_form, optimizer or estimate.
    std::string method;
    double value = 0.0;
    std::optional<Rational> exact;
    /// Optimizer maximizer in sqrt(F) coordinates.
    std::vector<double> point;
};

/// Optimal average fidelity of N1 -> N2 universal cloning.
inline Rational werner_fidelity(const CloningParams &c) {
    return Rational(c.n1, c.n2) +
           Rational((c.n2 - c.n1) * (c.n1 + 1), c.n2 * (c.n1 + c.d));
}

/// (N + d - 1) / (d N)
inline Rational symmetric_bound(int d, int n) {
    detail::require_dimension(d);
    if (n < 1) {
        throw std::invalid_argument("N must be positive");
    }
    return Rational(n + d - 1, d * n);
}

/**
 * Slack of sum F <= (d-1)/d + (sum sqrt F)^2 / (N+d-1). Nonnegative means the
 * fidelities are jointly attainable.
 */
inline double kay_constraint_residual(const std::vector<double> &F, int d) {
    detail::require_dimension(d);
    if (F.empty()) {
        throw std::invalid_argument("fidelity list is empty");
    }
    double sum = 0.0;
    double root_sum = 0.0;
    for (double f : F) {
        if (!(f >= 0.0 && f <= 1.0)) {
            throw std::invalid_argument("fidelities must lie in [0, 1]");
        }
        sum += f;
        root_sum += std::sqrt(f);
    }
    const double n = static_cast<double>(F.size());
    return (d - 1.0) / d + root_sum * root_sum / (n + d - 1.0) - sum;
}

/// 1/2 (1 + sqrt(1 + 4 (d^2-1)(p-1) p / d^2))
inline double asym_closed_form_n2(double p, int d) {
    detail::require_dimension(d);
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("p must lie in [0, 1]");
    }
    const double dd = static_cast<double>(d) * d;
    return 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * (dd - 1.0) * (p - 1.0) * p / dd));
}

namespace detail {

/// |x|^2 - (sum x)^2 / (N + d - 1)
inline double surface_form(const std::vector<double> &x, int d) {
    double sq = 0.0;
    double s = 0.0;
    for (double v : x) {
        sq += v * v;
        s += v;
    }
    return sq - s * s / (static_cast<double>(x.size()) + d - 1.0);
}

inline double weighted_square(const std::vector<double> &p, const std::vector<double> &x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += p[i] * x[i] * x[i];
    }
    return s;
}

/// Radial retraction onto the surface form(x) = (d-1)/d. The form is positive
/// definite, so this is well defined for any nonzero x.
inline void retract(std::vector<double> &x, int d) {
    const double q = surface_form(x, d);
    const double scale = std::sqrt(((d - 1.0) / d) / q);
    for (double &v : x) {
        v *= scale;
    }
}

} // namespace detail

/**
 * Maximizes sum p_i x_i^2 over x in [0,1]^N on the surface
 * |x|^2 - (sum x)^2/(N+d-1) = (d-1)/d, where x_i = sqrt(F_i).
 *
 * Each restart starts from a uniform point of the cube pushed onto the
 * surface, then takes tangent gradient steps followed by clamping at zero and
 * radial retraction. Steps that do not improve the objective are undone and
 * the step size halved; a restart ends when the step falls below the tolerance.
 */
inline BoundResult asym_optimize(const AsymSpec &spec, int restarts = 64,
                                 std::uint64_t seed = 0, double tolerance = 1e-10) {
    const int n = spec.n();
    const int d = spec.d;
    if (n < 2) {
        throw std::invalid_argument("asymmetric optimization needs N >= 2");
    }
    if (restarts < 1) {
        throw std::invalid_argument("restarts must be positive");
    }
    const auto &p = spec.probabilities;
    const double m = static_cast<double>(n) + d - 1.0;

    std::optional<BoundResult> best;
    for (int r = 0; r < restarts; ++r) {
        Rng rng(split_seed(seed, static_cast<std::uint64_t>(r)));
        std::vector<double> x(n);
        for (double &v : x) {
            v = rng.uniform() + 1e-3;
        }
        detail::retract(x, d);
        double val = detail::weighted_square(p, x);
        double step = 0.5;
        for (int it = 0; it < 200000 && step > tolerance; ++it) {
            const double s = std::accumulate(x.begin(), x.end(), 0.0);
            std::vector<double> g(n);
            std::vector<double> normal(n);
            double gn = 0.0;
            double nn = 0.0;
            for (int i = 0; i < n; ++i) {
                g[i] = 2.0 * p[i] * x[i];
                normal[i] = 2.0 * (x[i] - s / m);
                gn += g[i] * normal[i];
                nn += normal[i] * normal[i];
            }
            std::vector<double> y(n);
            for (int i = 0; i < n; ++i) {
                y[i] = std::max(0.0, x[i] + step * (g[i] - gn / nn * normal[i]));
            }
            if (std::all_of(y.begin(), y.end(), [](double v) { return v == 0.0; })) {
                step *= 0.5;
                continue;
            }
            detail::retract(y, d);
            const double yv = detail::weighted_square(p, y);
            if (yv > val) {
                x = std::move(y);
                val = yv;
                step *= 1.2;
            } else {
                step *= 0.5;
            }
        }
        const bool in_cube =
            std::all_of(x.begin(), x.end(), [](double v) { return v >= 0.0 && v <= 1.0 + 1e-9; });
        if (!in_cube) {
            continue;
        }
        if (!best || val > best->value) {
            best = BoundResult{"asym_optimize", "optimizer", val, std::nullopt, x};
        }
    }
    if (!best) {
        throw InvariantError("no feasible point of the constraint surface inside [0,1]^N");
    }
    return *best;
}

/// Magic basis; in it, the fully entangled fraction of a two-qubit state is the
/// largest eigenvalue of the real part of the transformed matrix.
inline ComplexMatrix magic_basis() {
    const double s = 1.0 / std::sqrt(2.0);
    const Complex i(0.0, 1.0);
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = s;
    m(3, 0) = s;
    m(0, 1) = i * s;
    m(3, 1) = -i * s;
    m(1, 2) = i * s;
    m(2, 2) = i * s;
    m(1, 3) = s;
    m(2, 3) = -s;
    return m;
}

inline bool fully_entangled_fraction_is_exact(int d) { return d == 2; }

/**
 * max over maximally entangled |psi> of <psi|rho|psi>.
 *
 * Exact for two qubits. For d >= 3 each start iterates
 * U <- polar(reshape(rho vec(U))), which never decreases the overlap, from the
 * identity and seeded Haar-like unitaries; the value is a lower estimate.
 */
inline double fully_entangled_fraction(const DensityMatrix &rho, std::uint64_t seed = 0,
                                       int starts = 8) {
    const int d = detail::square_root_dimension(rho.dim());
    if (d == 0) {
        throw InvalidDimension("fully entangled fraction needs a d*d-dimensional state");
    }
    if (d == 2) {
        const ComplexMatrix m = magic_basis();
        const Eigen::MatrixXd t = (m.adjoint() * rho.matrix() * m).real();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (t + t.transpose()),
                                                          Eigen::EigenvaluesOnly);
        return std::clamp(es.eigenvalues().maxCoeff(), 0.0, 1.0);
    }

    auto value = [&](const ComplexMatrix &u) {
        const ComplexVector v = apply_to_bell_state(u).amplitudes();
        return (v.adjoint() * rho.matrix() * v)(0, 0).real();
    };
    Rng rng(seed);
    double best = 0.0;
    for (int s = 0; s < std::max(1, starts); ++s) {
        ComplexMatrix u = ComplexMatrix::Identity(d, d);
        if (s > 0) {
            ComplexMatrix g(d, d);
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j < d; ++j) {
                    const double re = rng.normal();
                    const double im = rng.normal();
                    g(i, j) = Complex(re, im);
                }
            }
            Eigen::HouseholderQR<ComplexMatrix> qr(g);
            u = qr.householderQ();
        }
        double cur = value(u);
        for (int it = 0; it < 1000; ++it) {
            const ComplexVector v = apply_to_bell_state(u).amplitudes();
            const ComplexVector w = rho.matrix() * v;
            ComplexMatrix gm(d, d);
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j < d; ++j) {
                    gm(i, j) = w(i * d + j);
                }
            }
            Eigen::JacobiSVD<ComplexMatrix> svd(gm, Eigen::ComputeFullU | Eigen::ComputeFullV);
            const ComplexMatrix next = svd.matrixU() * svd.matrixV().adjoint();
            const double nv = value(next);
            if (nv <= cur + 1e-15) {
                break;
            }
            u = next;
            cur = nv;
        }
        best = std::max(best, cur);
    }
    return std::clamp(best, 0.0, 1.0);
}

/**
 * Smallest constraint residual over random pure three-qubit states
 * (A1', A2', B), using the fully entangled fractions of (A1', B) and (A2', B).
 */
inline double monogamy_min_residual(std::size_t samples, std::uint64_t seed) {
    const std::array<int, 3> dims{2, 2, 2};
    const std::array<int, 2> first{0, 2};
    const std::array<int, 2> second{1, 2};
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < samples; ++s) {
        Rng rng(split_seed(seed, s));
        const Ket psi = haar_random_ket(8, rng);
        const DensityMatrix rho1 =
            DensityMatrix::normalized(partial_trace_pure(psi.amplitudes(), dims, first));
        const DensityMatrix rho2 =
            DensityMatrix::normalized(partial_trace_pure(psi.amplitudes(), dims, second));
        const double r = kay_constraint_residual(
            {fully_entangled_fraction(rho1), fully_entangled_fraction(rho2)}, 2);
        lo = std::min(lo, r);
    }
    return lo;
}

} // namespace qrac
