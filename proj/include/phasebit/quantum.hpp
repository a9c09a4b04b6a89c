// Copyright 2026 The phasebit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "phasebit/angle.hpp"
#include "phasebit/error.hpp"
#include "phasebit/stats.hpp"

namespace phasebit::quantum {

using Complex = std::complex<double>;
using Matrix2 = std::array<std::array<Complex, 2>, 2>;

inline constexpr std::size_t kMaxQubits = 10;
inline constexpr double kNormTolerance = 1e-12;

/// Dense state vector over n <= 10 qubits.
///
/// Basis index bits are read left to right as qubits 0..n-1, so qubit 0 is
/// the most significant bit: for n = 2, index 2 is |10> (qubit 0 set).
class QuantumState {
  public:
    /// The computational basis state |index>.
    static QuantumState basis(std::size_t n_qubits, std::size_t index) {
        check_qubit_count(n_qubits);
        const std::size_t dim = std::size_t{1} << n_qubits;
        if (index >= dim) {
            throw UsageError("QuantumState::basis: index out of range");
        }
        std::vector<Complex> amps(dim, Complex(0.0, 0.0));
        amps[index] = 1.0;
        return QuantumState(n_qubits, std::move(amps));
    }

    /// Wraps `amplitudes`; the length must be 2^n and the norm 1 within 1e-12.
    static QuantumState from_amplitudes(std::vector<Complex> amplitudes) {
        std::size_t n = 0;
        while ((std::size_t{1} << n) < amplitudes.size()) {
            ++n;
        }
        if (amplitudes.empty() || (std::size_t{1} << n) != amplitudes.size()) {
            throw UsageError("QuantumState: amplitude count must be a power of two");
        }
        check_qubit_count(n);
        QuantumState s(n, std::move(amplitudes));
        if (std::abs(s.norm_squared() - 1.0) > kNormTolerance) {
            throw DomainError("QuantumState: amplitudes are not normalized");
        }
        return s;
    }

    [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }
    [[nodiscard]] std::size_t dimension() const { return amplitudes_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const { return amplitudes_; }
    [[nodiscard]] Complex amplitude(std::size_t index) const { return amplitudes_.at(index); }

    [[nodiscard]] double norm_squared() const {
        double total = 0.0;
        for (const Complex& a : amplitudes_) {
            total += std::norm(a);
        }
        return total;
    }

    /// Probability that qubit `q` reads 0.
    [[nodiscard]] double probability_zero(std::size_t q) const {
        const std::size_t mask = bit_mask(q);
        double p = 0.0;
        for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
            if ((i & mask) == 0) {
                p += std::norm(amplitudes_[i]);
            }
        }
        return p;
    }

    [[nodiscard]] std::size_t bit_mask(std::size_t q) const {
        if (q >= n_qubits_) {
            throw UsageError("QuantumState: qubit index out of range");
        }
        return std::size_t{1} << (n_qubits_ - 1 - q);
    }

    /// Applies a 2x2 operator to qubit `q`. No unitarity check: observables
    /// go through here too.
    [[nodiscard]] QuantumState apply(const Matrix2& op, std::size_t q) const {
        const std::size_t mask = bit_mask(q);
        std::vector<Complex> out(amplitudes_.size());
        for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
            if ((i & mask) != 0) {
                continue;
            }
            const Complex a0 = amplitudes_[i];
            const Complex a1 = amplitudes_[i | mask];
            out[i] = op[0][0] * a0 + op[0][1] * a1;
            out[i | mask] = op[1][0] * a0 + op[1][1] * a1;
        }
        return QuantumState(n_qubits_, std::move(out));
    }

    /// <this|other>
    [[nodiscard]] Complex inner(const QuantumState& other) const {
        if (other.dimension() != dimension()) {
            throw UsageError("QuantumState::inner: dimension mismatch");
        }
        Complex total(0.0, 0.0);
        for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
            total += std::conj(amplitudes_[i]) * other.amplitudes_[i];
        }
        return total;
    }

  private:
    QuantumState(std::size_t n, std::vector<Complex> amps)
        : n_qubits_(n), amplitudes_(std::move(amps)) {}

    static void check_qubit_count(std::size_t n) {
        if (n < 1 || n > kMaxQubits) {
            throw UsageError("QuantumState: qubit count must be in [1, 10]");
        }
    }

    friend QuantumState apply_cnot(const QuantumState&, std::size_t, std::size_t);

    std::size_t n_qubits_;
    std::vector<Complex> amplitudes_;
};

inline Matrix2 hadamard_matrix() {
    constexpr double h = std::numbers::sqrt2 / 2.0;
    return {{{Complex(h), Complex(h)}, {Complex(h), Complex(-h)}}};
}

/// Unitary Hadamard (1/sqrt2)[[1, 1], [1, -1]] on `target`.
inline QuantumState apply_hadamard(const QuantumState& state, std::size_t target) {
    return state.apply(hadamard_matrix(), target);
}

/// Flips `target` on every basis state where `control` is set.
inline QuantumState apply_cnot(const QuantumState& state, std::size_t control, std::size_t target) {
    if (control == target) {
        throw UsageError("apply_cnot: control and target must differ");
    }
    const std::size_t cmask = state.bit_mask(control);
    const std::size_t tmask = state.bit_mask(target);
    std::vector<Complex> out(state.amplitudes_.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const std::size_t j = (i & cmask) != 0 ? (i ^ tmask) : i;
        out[j] = state.amplitudes_[i];
    }
    return QuantumState(state.n_qubits_, std::move(out));
}

/// Spin measurement along `theta` in the X-Z plane: cos(theta) Z + sin(theta) X.
struct Observable {
    Angle theta;

    [[nodiscard]] Matrix2 matrix() const {
        const double c = std::cos(theta.radians());
        const double s = std::sin(theta.radians());
        return {{{Complex(c), Complex(s)}, {Complex(s), Complex(-c)}}};
    }
};

/// <psi| A(qa) B(qb) |psi> for observables on two distinct qubits.
inline double expectation(const QuantumState& psi, const Observable& a, std::size_t qa,
                          const Observable& b, std::size_t qb) {
    if (qa == qb) {
        throw UsageError("expectation: observables must act on distinct qubits");
    }
    const QuantumState image = psi.apply(a.matrix(), qa).apply(b.matrix(), qb);
    return psi.inner(image).real();
}

/// (|01> - |10>) / sqrt2
inline QuantumState singlet_state() {
    constexpr double h = std::numbers::sqrt2 / 2.0;
    return QuantumState::from_amplitudes({Complex(0.0), Complex(h), Complex(-h), Complex(0.0)});
}

/// <A(a) (x) B(b)> on the singlet, computed from the state vector.
inline double singlet_correlation(Angle a, Angle b) {
    return expectation(singlet_state(), Observable{a}, 0, Observable{b}, 1);
}

/// Quantum CHSH value of the singlet, same combination as analytic_chsh.
inline double chsh_quantum(const ChshAngles& a) {
    return chsh_combination(singlet_correlation(a.a1, a.b1), singlet_correlation(a.a1, a.b2),
                            singlet_correlation(a.a2, a.b1), singlet_correlation(a.a2, a.b2));
}

}  // namespace phasebit::quantum
