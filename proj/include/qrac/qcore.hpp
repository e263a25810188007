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
 * @file qcore.hpp
 * @brief Dense complex linear algebra and quantum-state primitives.
 *
 * States are stored as Eigen vectors/matrices. Composite systems use the
 * row-major (big-endian) tensor convention: for subsystems with dimensions
 * (d_0, ..., d_{n-1}) the basis index is ((i_0 * d_1 + i_1) * d_2 + ...).
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "error.hpp"
#include "random.hpp"
#include "rational.hpp"

namespace qrac {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

namespace tol {
inline constexpr double kNorm = 1e-12;
inline constexpr double kHermitian = 1e-12;
inline constexpr double kTrace = 1e-12;
/// Smallest eigenvalue still accepted as positive semidefinite.
inline constexpr double kPsd = -1e-10;
inline constexpr double kFidelity = 1e-12;
/// |<a|b>| must be within this of one for two kets to be the same ray.
inline constexpr double kSameState = 1e-10;
} // namespace tol

namespace detail {

inline bool all_finite(const ComplexMatrix &m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
                return false;
            }
        }
    }
    return true;
}

inline std::size_t product(std::span<const int> dims) {
    return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                           [](std::size_t a, int b) { return a * static_cast<std::size_t>(b); });
}

/// Returns d when n == d*d with d >= 2, otherwise 0.
inline int square_root_dimension(Eigen::Index n) {
    const auto d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    return (d >= 2 && static_cast<Eigen::Index>(d) * d == n) ? d : 0;
}

inline void validate_dims(std::span<const int> dims) {
    if (dims.empty()) {
        throw ShapeError("subsystem dimension list is empty");
    }
    for (int d : dims) {
        if (d < 1) {
            throw ShapeError("subsystem dimensions must be positive");
        }
    }
}


/// Row-major strides of a composite index.
inline std::vector<std::size_t> strides(std::span<const int> dims) {
    const auto n = dims.size();
    std::vector<std::size_t> stride(n, 1);
    for (std::size_t i = n - 1; i-- > 0;) {
        stride[i] = stride[i + 1] * static_cast<std::size_t>(dims[i + 1]);
    }
    return stride;
}

/// Full-index offsets of every multi-index over `ids`, first id most significant.
inline std::vector<std::size_t> group_offsets(std::span<const int> dims,
                                              const std::vector<int> &ids) {
    const auto stride = strides(dims);
    std::vector<std::size_t> out{0};
    for (int id : ids) {
        std::vector<std::size_t> next;
        next.reserve(out.size() * static_cast<std::size_t>(dims[id]));
        for (std::size_t base : out) {
            for (int v = 0; v < dims[id]; ++v) {
                next.push_back(base + static_cast<std::size_t>(v) * stride[id]);
            }
        }
        out = std::move(next);
    }
    return out;
}

/// Offsets of the listed subsystems (in the listed order) and of the rest (ascending).
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
split_offsets(std::span<const int> dims, std::span<const int> listed, bool sort_listed = true) {
    validate_dims(dims);
    const int n = static_cast<int>(dims.size());
    std::vector<bool> used(n, false);
    std::vector<int> ids;
    for (int k : listed) {
        if (k < 0 || k >= n || used[k]) {
            throw ShapeError("subsystem indices must be distinct and in range");
        }
        used[k] = true;
        ids.push_back(k);
    }
    if (sort_listed) {
        std::sort(ids.begin(), ids.end());
    }
    std::vector<int> rest;
    for (int i = 0; i < n; ++i) {
        if (!used[i]) {
            rest.push_back(i);
        }
    }
    return {group_offsets(dims, ids), group_offsets(dims, rest)};
}
} // namespace detail

/// Unit-norm complex vector.
class Ket {
  public:
    /// Takes ownership of already-normalized amplitudes.
    explicit Ket(ComplexVector amplitudes) : amps_(std::move(amplitudes)) {
        if (amps_.size() == 0 || !detail::all_finite(amps_)) {
            throw InvariantError("ket amplitudes must be finite and non-empty");
        }
        if (std::abs(amps_.norm() - 1.0) > tol::kNorm) {
            throw InvariantError("ket is not normalized (norm " + std::to_string(amps_.norm()) + ")");
        }
    }

    static Ket normalized(ComplexVector v) {
        const double n = v.norm();
        if (!(n > 0.0) || !std::isfinite(n)) {
            throw InvariantError("cannot normalize a zero or non-finite vector");
        }
        v /= n;
        return Ket(std::move(v));
    }

    static Ket basis(int dim, int index) {
        if (index < 0 || index >= dim) {
            throw ShapeError("basis index out of range");
        }
        ComplexVector v = ComplexVector::Zero(dim);
        v(index) = 1.0;
        return Ket(std::move(v));
    }

    [[nodiscard]] int dim() const { return static_cast<int>(amps_.size()); }
    [[nodiscard]] const ComplexVector &amplitudes() const { return amps_; }
    [[nodiscard]] Complex operator[](int i) const { return amps_(i); }

    /// <this|other>
    [[nodiscard]] Complex inner(const Ket &other) const { return amps_.dot(other.amps_); }

    [[nodiscard]] ComplexMatrix projector() const { return amps_ * amps_.adjoint(); }

  private:
    ComplexVector amps_;
};

/// Equality of rays: global phase is ignored.
inline bool same_state(const Ket &a, const Ket &b, double tolerance = tol::kSameState) {
    return a.dim() == b.dim() && std::abs(std::abs(a.inner(b)) - 1.0) <= tolerance;
}

/// Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
  public:
    explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
        if (m_.rows() == 0 || m_.rows() != m_.cols()) {
            throw ShapeError("density matrix must be square and non-empty");
        }
        if (!detail::all_finite(m_)) {
            throw InvariantError("density matrix has non-finite entries");
        }
        if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > tol::kHermitian) {
            throw InvariantError("density matrix is not Hermitian");
        }
        if (std::abs(m_.trace() - Complex(1.0)) > tol::kTrace) {
            throw InvariantError("density matrix trace is not one");
        }
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m_, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < tol::kPsd) {
            throw InvariantError("density matrix has a negative eigenvalue");
        }
    }

    static DensityMatrix from_ket(const Ket &k) { return DensityMatrix(k.projector()); }

    static DensityMatrix maximally_mixed(int dim) {
        return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
    }

    /// Scales a nonzero PSD matrix to unit trace before validating it.
    static DensityMatrix normalized(const ComplexMatrix &m) {
        const Complex t = m.trace();
        if (!(t.real() > 0.0)) {
            throw InvariantError("cannot normalize a matrix with non-positive trace");
        }
        ComplexMatrix h = 0.5 * (m + m.adjoint()) / t.real();
        return DensityMatrix(std::move(h));
    }

    [[nodiscard]] int dim() const { return static_cast<int>(m_.rows()); }
    [[nodiscard]] const ComplexMatrix &matrix() const { return m_; }

  private:
    ComplexMatrix m_;
};

/// Real number in [0, 1] (with 1e-12 slack above).
class Fidelity {
  public:
    explicit Fidelity(double v) : v_(v) {
        if (!std::isfinite(v) || v < -tol::kFidelity || v > 1.0 + tol::kFidelity) {
            throw InvariantError("fidelity out of range: " + std::to_string(v));
        }
    }
    [[nodiscard]] double value() const { return v_; }

  private:
    double v_;
};

/// (1/sqrt(d)) sum_i |ii>
inline Ket bell_state(int d) {
    detail::require_dimension(d);
    ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(d) * d);
    const double a = 1.0 / std::sqrt(static_cast<double>(d));
    for (int i = 0; i < d; ++i) {
        v(static_cast<Eigen::Index>(i) * d + i) = a;
    }
    return Ket::normalized(std::move(v));
}

inline ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

inline Ket kron(const Ket &a, const Ket &b) {
    ComplexVector v(static_cast<Eigen::Index>(a.dim()) * b.dim());
    for (int i = 0; i < a.dim(); ++i) {
        v.segment(static_cast<Eigen::Index>(i) * b.dim(), b.dim()) = a[i] * b.amplitudes();
    }
    return Ket::normalized(std::move(v));
}

/**
 * Partial trace of an operator on a composite space.
 *
 * `keep` lists the subsystems that survive; the result orders them by
 * ascending subsystem index regardless of the order in `keep`. Works on any
 * square matrix, including the unnormalized post-measurement operators used
 * in protocol simulations.
 */
inline ComplexMatrix partial_trace(const ComplexMatrix &op, std::span<const int> dims,
                                   std::span<const int> keep) {
    detail::validate_dims(dims);
    const auto total = detail::product(dims);
    if (op.rows() != op.cols() || static_cast<std::size_t>(op.rows()) != total) {
        throw ShapeError("operator dimension " + std::to_string(op.rows()) +
                         " does not match subsystem product " + std::to_string(total));
    }
    const auto [keep_off, trace_off] = detail::split_offsets(dims, keep);

    const auto kd = static_cast<Eigen::Index>(keep_off.size());
    ComplexMatrix out = ComplexMatrix::Zero(kd, kd);
    for (Eigen::Index r = 0; r < kd; ++r) {
        for (Eigen::Index c = 0; c < kd; ++c) {
            Complex s = 0.0;
            for (std::size_t t : trace_off) {
                s += op(static_cast<Eigen::Index>(keep_off[r] + t),
                        static_cast<Eigen::Index>(keep_off[c] + t));
            }
            out(r, c) = s;
        }
    }
    return out;
}

inline DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const int> dims,
                                   std::span<const int> keep) {
    ComplexMatrix m = partial_trace(rho.matrix(), dims, keep);
    // Re-symmetrize to remove rounding asymmetry before validation.
    m = 0.5 * (m + m.adjoint()).eval();
    return DensityMatrix(std::move(m));
}

inline DensityMatrix partial_trace(const DensityMatrix &rho, std::initializer_list<int> dims,
                                   std::initializer_list<int> keep) {
    return partial_trace(rho, std::span<const int>(dims.begin(), dims.size()),
                         std::span<const int>(keep.begin(), keep.size()));
}

/// Reduced state of a (possibly unnormalized) pure vector on the kept subsystems.
inline ComplexMatrix partial_trace_pure(const ComplexVector &psi, std::span<const int> dims,
                                        std::span<const int> keep) {
    if (static_cast<std::size_t>(psi.size()) != detail::product(dims)) {
        throw ShapeError("vector length does not match subsystem product");
    }
    const auto [keep_off, trace_off] = detail::split_offsets(dims, keep);
    ComplexMatrix m(static_cast<Eigen::Index>(keep_off.size()),
                    static_cast<Eigen::Index>(trace_off.size()));
    for (std::size_t r = 0; r < keep_off.size(); ++r) {
        for (std::size_t t = 0; t < trace_off.size(); ++t) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(t)) =
                psi(static_cast<Eigen::Index>(keep_off[r] + trace_off[t]));
        }
    }
    return m * m.adjoint();
}

/// Applies `op` to the listed subsystems of `psi` (in the listed order) without
/// forming the full operator.
inline ComplexVector apply_local(const ComplexMatrix &op, const ComplexVector &psi,
                                 std::span<const int> dims, std::span<const int> targets) {
    if (static_cast<std::size_t>(psi.size()) != detail::product(dims)) {
        throw ShapeError("vector length does not match subsystem product");
    }
    const auto [target_off, rest_off] = detail::split_offsets(dims, targets, false);
    const auto k = static_cast<Eigen::Index>(target_off.size());
    if (op.rows() != k || op.cols() != k) {
        throw ShapeError("operator does not match target subsystem dimensions");
    }
    ComplexVector out(psi.size());
    ComplexVector local(k);
    for (std::size_t base : rest_off) {
        for (Eigen::Index i = 0; i < k; ++i) {
            local(i) = psi(static_cast<Eigen::Index>(base + target_off[i]));
        }
        const ComplexVector res = op * local;
        for (Eigen::Index i = 0; i < k; ++i) {
            out(static_cast<Eigen::Index>(base + target_off[i])) = res(i);
        }
    }
    return out;
}

/**
 * Lifts `op`, acting on the listed subsystems (in the listed order), to the
 * full composite space with identity elsewhere.
 */
inline ComplexMatrix embed(const ComplexMatrix &op, std::span<const int> dims,
                           std::span<const int> targets) {
    detail::validate_dims(dims);
    const int n = static_cast<int>(dims.size());
    std::size_t op_dim = 1;
    std::vector<bool> used(n, false);
    for (int t : targets) {
        if (t < 0 || t >= n || used[t]) {
            throw ShapeError("embed targets must be distinct valid subsystem indices");
        }
        used[t] = true;
        op_dim *= static_cast<std::size_t>(dims[t]);
    }
    if (op.rows() != op.cols() || static_cast<std::size_t>(op.rows()) != op_dim) {
        throw ShapeError("operator does not match target subsystem dimensions");
    }
    const auto total = static_cast<Eigen::Index>(detail::product(dims));

    std::vector<int> digits(n);
    auto split = [&](Eigen::Index idx, std::vector<int> &out) {
        for (int i = n - 1; i >= 0; --i) {
            out[i] = static_cast<int>(idx % dims[i]);
            idx /= dims[i];
        }
    };
    auto local_index = [&](const std::vector<int> &dg) {
        Eigen::Index li = 0;
        for (int t : targets) {
            li = li * dims[t] + dg[t];
        }
        return li;
    };

    ComplexMatrix out = ComplexMatrix::Zero(total, total);
    std::vector<int> rd(n);
    std::vector<int> cd(n);
    for (Eigen::Index c = 0; c < total; ++c) {
        split(c, cd);
        const Eigen::Index lc = local_index(cd);
        // Rows reachable from column c differ only on target digits.
        rd = cd;
        for (Eigen::Index lr = 0; lr < op.rows(); ++lr) {
            Eigen::Index rem = lr;
            for (auto it = targets.rbegin(); it != targets.rend(); ++it) {
                rd[*it] = static_cast<int>(rem % dims[*it]);
                rem /= dims[*it];
            }
            Eigen::Index r = 0;
            for (int i = 0; i < n; ++i) {
                r = r * dims[i] + rd[i];
            }
            out(r, c) = op(lr, lc);
        }
    }
    return out;
}

/// Singlet fraction <psi+|rho|psi+> of a state on C^d (x) C^d.
inline Fidelity entanglement_fidelity(const DensityMatrix &rho) {
    const int d = detail::square_root_dimension(rho.dim());
    if (d == 0) {
        throw InvalidDimension("entanglement fidelity needs a d*d-dimensional state, got " +
                               std::to_string(rho.dim()));
    }
    const Ket phi = bell_state(d);
    const double v = (phi.amplitudes().adjoint() * rho.matrix() * phi.amplitudes())(0, 0).real();
    return Fidelity(std::clamp(v, 0.0, 1.0));
}

/// Transmission fidelity from singlet fraction: f = (F d + 1) / (d + 1).
inline Rational f_from_F(const Rational &F, int d) {
    detail::require_dimension(d);
    return (F * d + 1) / Rational(d + 1);
}

inline Rational F_from_f(const Rational &f, int d) {
    detail::require_dimension(d);
    return (f * (d + 1) - 1) / Rational(d);
}

inline double f_from_F(double F, int d) {
    detail::require_dimension(d);
    return (F * d + 1.0) / (d + 1.0);
}

inline double F_from_f(double f, int d) {
    detail::require_dimension(d);
    return (f * (d + 1.0) - 1.0) / d;
}

/// Haar-random pure state: normalized vector of i.i.d. standard complex Gaussians.
inline Ket haar_random_ket(int dim, Rng &rng) {
    ComplexVector v(dim);
    for (int i = 0; i < dim; ++i) {
        const double re = rng.normal();
        const double im = rng.normal();
        v(i) = Complex(re, im);
    }
    return Ket::normalized(std::move(v));
}

struct MonteCarloEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t samples = 0;
};

using Channel = std::function<DensityMatrix(const Ket &)>;

/**
 * Monte Carlo estimate of the Haar-averaged input/output overlap of a channel.
 *
 * Samples are drawn in fixed chunks of 64, chunk k seeded with
 * split_seed(seed, k), and reduced in chunk order, so the result is identical
 * for any `threads`. The channel must be safe to call concurrently when
 * threads > 1.
 */
inline MonteCarloEstimate transmission_fidelity_mc(const Channel &channel, int d,
                                                   std::size_t samples, std::uint64_t seed,
                                                   unsigned threads = 1) {
    detail::require_dimension(d);
    if (samples == 0) {
        throw std::invalid_argument("transmission_fidelity_mc needs at least one sample");
    }
    constexpr std::size_t kChunk = 64;
    const std::size_t chunks = (samples + kChunk - 1) / kChunk;
    std::vector<double> sum(chunks, 0.0);
    std::vector<double> sum_sq(chunks, 0.0);

    auto run_chunk = [&](std::size_t k) {
        Rng rng(split_seed(seed, k));
        const std::size_t begin = k * kChunk;
        const std::size_t end = std::min(samples, begin + kChunk);
        for (std::size_t s = begin; s < end; ++s) {
            const Ket phi = haar_random_ket(d, rng);
            const DensityMatrix out = channel(phi);
            const double v =
                (phi.amplitudes().adjoint() * out.matrix() * phi.amplitudes())(0, 0).real();
            sum[k] += v;
            sum_sq[k] += v * v;
        }
    };

    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(chunks)));
    if (threads == 1) {
        for (std::size_t k = 0; k < chunks; ++k) {
            run_chunk(k);
        }
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t k = w; k < chunks; k += threads) {
                    run_chunk(k);
                }
            });
        }
        for (auto &t : pool) {
            t.join();
        }
    }

    double s = 0.0;
    double s2 = 0.0;
    for (std::size_t k = 0; k < chunks; ++k) {
        s += sum[k];
        s2 += sum_sq[k];
    }
    const auto n = static_cast<double>(samples);
    MonteCarloEstimate est;
    est.samples = samples;
    est.mean = s / n;
    if (samples > 1) {
        const double var = std::max(0.0, (s2 - n * est.mean * est.mean) / (n - 1.0));
        est.std_error = std::sqrt(var / n);
    }
    return est;
}

} // namespace qrac
