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
// Test-side reference computations, written without the library's helpers
// so that a shared mistake cannot hide.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using C = std::complex<double>;
using M = Eigen::MatrixXcd;

/// Dense Kronecker product by explicit index arithmetic.
inline M kron(const M &a, const M &b) {
    M out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

/// Trace over the second factor of a (da*db)-dimensional operator.
inline M trace_second(const M &rho, int da, int db) {
    M out = M::Zero(da, da);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j)
            for (int k = 0; k < db; ++k)
                out(i, j) += rho(i * db + k, j * db + k);
    return out;
}

/// Trace over the first factor.
inline M trace_first(const M &rho, int da, int db) {
    M out = M::Zero(db, db);
    for (int i = 0; i < db; ++i)
        for (int j = 0; j < db; ++j)
            for (int k = 0; k < da; ++k)
                out(i, j) += rho(k * db + i, k * db + j);
    return out;
}

/// Matrix power of a diagonalizable matrix by eigen-decomposition of a unitary.
inline M integer_power(const M &m, int n) {
    M out = M::Identity(m.rows(), m.cols());
    for (int i = 0; i < n; ++i) out = out * m;
    return out;
}

/// (3 + 2 sqrt 2) / 8
inline double qubit_code_value() { return (3.0 + 2.0 * std::sqrt(2.0)) / 8.0; }

/// Random density matrix G G^dagger / tr from a fixed LCG, independent of the library RNG.
inline M random_density(int n, unsigned &state) {
    auto next = [&state] {
        state = state * 1664525u + 1013904223u;
        return (static_cast<double>(state >> 8) / 16777216.0) - 0.5;
    };
    M g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = C(next(), next());
    M rho = g * g.adjoint();
    return rho / rho.trace().real();
}

/// Fractional Z^t, principal branch: diag(exp(2 pi i k t / d)), k = 0..d-1.
inline M z_power(int d, double t) {
    M z = M::Zero(d, d);
    for (int k = 0; k < d; ++k) z(k, k) = std::polar(1.0, 2.0 * std::numbers::pi * k * t / d);
    return z;
}

/// Fractional X^t from the spectral decomposition of the shift |j> -> |j+1>.
/// Eigenvector f_k = sum_j w^{-jk} |j> / sqrt(d) has eigenvalue w^k.
inline M x_power(int d, double t) {
    M out = M::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        Eigen::VectorXcd f(d);
        for (int j = 0; j < d; ++j)
            f(j) = std::polar(1.0 / std::sqrt(static_cast<double>(d)),
                              -2.0 * std::numbers::pi * j * k / d);
        out += std::polar(1.0, 2.0 * std::numbers::pi * k * t / d) * f * f.adjoint();
    }
    return out;
}

/// |phi+> = sum_i |ii> / sqrt(d)
inline Eigen::VectorXcd bell(int d) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d * d);
    for (int i = 0; i < d; ++i) v(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
    return v;
}

/// (X^a Z^b (x) I)|phi+>
inline Eigen::VectorXcd weyl_bell(int d, double a, double b) {
    return kron(x_power(d, a) * z_power(d, b), M::Identity(d, d)) * bell(d);
}

/**
 * Two-strings success table computed from scratch.
 * table[e] = {first, second}. Returns per_string[c][v].
 */
inline std::vector<std::vector<double>>
two_strings_success(int d, const std::vector<std::pair<int, int>> &table) {
    const int n = d * d;
    auto index_of = [&](int x, int y) {
        for (int e = 0; e < n; ++e)
            if (table[e].first == x && table[e].second == y) return e;
        return -1;
    };
    std::vector<std::vector<double>> out(2, std::vector<double>(n, 0.0));
    for (int c = 0; c < 2; ++c) {
        const double s = c == 0 ? 1.0 : -1.0;
        const double offset = (1 - c) / 2.0 - 1.0 / (2.0 * d);
        for (int v0 = 0; v0 < n; ++v0) {
            for (int v1 = 0; v1 < n; ++v1) {
                const int x0 = v0 / d, x1 = v0 % d, y0 = v1 / d, y1 = v1 % d;
                const double e0 = index_of(x0, y0), e1 = index_of(x1, y1);
                const auto psi = weyl_bell(d, e0 / d, e1 / d);
                const int b0 = c == 0 ? x0 : y0;
                const int b1 = c == 0 ? x1 : y1;
                const auto phi = weyl_bell(d, s * b0 + offset, s * b1 + offset);
                out[c][c == 0 ? v0 : v1] += std::norm(phi.dot(psi)) / n;
            }
        }
    }
    return out;
}

/**
 * Entanglement fidelity of a teleport with measurement elements M_i on (D, A)
 * and correction Z^{-b} X^{-a}, written without Kraus square roots: subsystem
 * order R D A B, outcome i leaves tr_{DA}[(I (x) M_i (x) I) rho] on R B.
 */
inline double teleport_F(int d, const std::vector<M> &elements,
                         const std::vector<std::pair<int, int>> &labels) {
    const Eigen::VectorXcd phi = bell(d);
    const Eigen::VectorXcd psi = kron(phi, phi);
    const M rho = psi * psi.adjoint();
    const M id = M::Identity(d, d);
    const int m = d * d;
    double F = 0.0;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const M post = kron(kron(id, elements[i]), id) * rho;
        M rb = M::Zero(m, m);
        for (int r1 = 0; r1 < d; ++r1)
            for (int b1 = 0; b1 < d; ++b1)
                for (int r2 = 0; r2 < d; ++r2)
                    for (int b2 = 0; b2 < d; ++b2)
                        for (int k = 0; k < m; ++k)
                            rb(r1 * d + b1, r2 * d + b2) +=
                                post((r1 * m + k) * d + b1, (r2 * m + k) * d + b2);
        const M corr =
            kron(id, z_power(d, -labels[i].second) * x_power(d, -labels[i].first));
        F += (phi.adjoint() * (corr * rb * corr.adjoint()) * phi)(0, 0).real();
    }
    return F;
}

} // namespace oracle
