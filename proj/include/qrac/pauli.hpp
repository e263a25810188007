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
 * @file pauli.hpp
 * @brief Generalized Pauli (Weyl) operators and their fractional powers.
 *
 * X|k> = |k+1 mod d>, Z|k> = w^k |k> with w = exp(2 pi i / d).
 * The DFT F[j,k] = w^{jk}/sqrt(d) satisfies X = F^dagger Z F.
 */

#include <cmath>
#include <numbers>
#include <string>

#include "error.hpp"
#include "qcore.hpp"
#include "rational.hpp"

namespace qrac {

/**
 * Branch used when raising the eigenvalue w^k to a real power t.
 *
 * principal: k in {0, ..., d-1}, eigenvalue becomes exp(2 pi i k t / d).
 * symmetric: k shifted into (-d/2, d/2] first.
 * Both agree for integer t.
 */
enum class RootBranch { principal, symmetric };

inline std::string to_string(RootBranch b) {
    return b == RootBranch::principal ? "principal" : "symmetric";
}

/// Exponent of a Weyl factor, kept exact and reduced into [0, d).
class WeylExponent {
  public:
    WeylExponent(int d, Rational t) : d_(d), t_(std::move(t)) {
        detail::require_dimension(d);
        const Rational period(d);
        // Reduce into [0, d): powers of X and Z are d-periodic on either branch.
        const auto q = t_.numerator() / (t_.denominator() * d);
        t_ -= Rational(q) * period;
        while (t_ < 0) {
            t_ += period;
        }
        while (t_ >= period) {
            t_ -= period;
        }
    }

    [[nodiscard]] int d() const { return d_; }
    [[nodiscard]] const Rational &value() const { return t_; }
    [[nodiscard]] double to_double() const { return qrac::to_double(t_); }

    friend bool operator==(const WeylExponent &, const WeylExponent &) = default;

  private:
    int d_;
    Rational t_;
};

/// Label (a, b) of the Bell-basis element (X^a Z^b (x) I)|psi+>.
class BellLabel {
  public:
    BellLabel(int d, int a, int b) : d_(d), a_(a), b_(b) {
        detail::require_dimension(d);
        if (a < 0 || a >= d || b < 0 || b >= d) {
            throw std::out_of_range("Bell label digits must lie in [0, d)");
        }
    }

    /// Label number i = a*d + b.
    static BellLabel from_index(int d, int i) { return BellLabel(d, i / d, i % d); }

    [[nodiscard]] int d() const { return d_; }
    [[nodiscard]] int a() const { return a_; }
    [[nodiscard]] int b() const { return b_; }
    [[nodiscard]] int index() const { return a_ * d_ + b_; }

    friend bool operator==(const BellLabel &, const BellLabel &) = default;

  private:
    int d_;
    int a_;
    int b_;
};

inline ComplexMatrix shift_x(int d) {
    detail::require_dimension(d);
    ComplexMatrix x = ComplexMatrix::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        x((k + 1) % d, k) = 1.0;
    }
    return x;
}

namespace detail {

inline Complex root_of_unity(int d, double power) {
    const double phase = 2.0 * std::numbers::pi * power / d;
    return {std::cos(phase), std::sin(phase)};
}

inline double branch_index(int k, int d, RootBranch branch) {
    if (branch == RootBranch::symmetric && 2 * k > d) {
        return static_cast<double>(k - d);
    }
    return static_cast<double>(k);
}

} // namespace detail

inline ComplexMatrix clock_z(int d) {
    detail::require_dimension(d);
    ComplexMatrix z = ComplexMatrix::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        z(k, k) = detail::root_of_unity(d, k);
    }
    return z;
}

inline ComplexMatrix dft(int d) {
    detail::require_dimension(d);
    ComplexMatrix f(d, d);
    const double s = 1.0 / std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
            f(j, k) = s * detail::root_of_unity(d, (j * k) % d);
        }
    }
    return f;
}

/// Z^t = diag(exp(2 pi i k t / d)).
inline ComplexMatrix frac_power_z(int d, double t, RootBranch branch = RootBranch::principal) {
    detail::require_dimension(d);
    if (!std::isfinite(t)) {
        throw InvariantError("Weyl exponent must be finite");
    }
    ComplexMatrix z = ComplexMatrix::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        z(k, k) = detail::root_of_unity(d, detail::branch_index(k, d, branch) * t);
    }
    return z;
}

/// X^t = F^dagger Z^t F.
inline ComplexMatrix frac_power_x(int d, double t, RootBranch branch = RootBranch::principal) {
    const ComplexMatrix f = dft(d);
    return f.adjoint() * frac_power_z(d, t, branch) * f;
}

inline ComplexMatrix frac_power_z(const WeylExponent &t, RootBranch branch = RootBranch::principal) {
    return frac_power_z(t.d(), t.to_double(), branch);
}

inline ComplexMatrix frac_power_x(const WeylExponent &t, RootBranch branch = RootBranch::principal) {
    return frac_power_x(t.d(), t.to_double(), branch);
}

/// X^a Z^b
inline ComplexMatrix weyl(int d, double a, double b, RootBranch branch = RootBranch::principal) {
    return frac_power_x(d, a, branch) * frac_power_z(d, b, branch);
}

inline ComplexMatrix weyl(const WeylExponent &a, const WeylExponent &b,
                          RootBranch branch = RootBranch::principal) {
    if (a.d() != b.d()) {
        throw ShapeError("Weyl exponents refer to different dimensions");
    }
    return weyl(a.d(), a.to_double(), b.to_double(), branch);
}

/// (U (x) I)|psi+> for a d x d operator U. The amplitude at i*d+j is U(i,j)/sqrt(d).
inline Ket apply_to_bell_state(const ComplexMatrix &u) {
    if (u.rows() != u.cols() || u.rows() < 2) {
        throw ShapeError("operator must be square with dimension >= 2");
    }
    const auto d = u.rows();
    ComplexVector v(d * d);
    const double s = 1.0 / std::sqrt(static_cast<double>(d));
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            v(i * d + j) = s * u(i, j);
        }
    }
    return Ket::normalized(std::move(v));
}

inline Ket bell_basis_element(const BellLabel &label) {
    return apply_to_bell_state(weyl(label.d(), label.a(), label.b()));
}

} // namespace qrac
