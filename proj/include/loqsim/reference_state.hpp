// Copyright 2026 The loqsim Authors
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

#ifndef LOQSIM_REFERENCE_STATE_HPP
#define LOQSIM_REFERENCE_STATE_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <stdexcept>

#include "loqsim/gate.hpp"

namespace loqsim {

template <typename Scalar>
using StateVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

using Amplitudes = StateVector<double>;

/// U3(theta, lambda, phi) =
///   [ cos(t/2)              -e^{i lambda} sin(t/2)        ]
///   [ e^{i phi} sin(t/2)     e^{i(lambda + phi)} cos(t/2) ]
template <typename Scalar>
Eigen::Matrix<std::complex<Scalar>, 2, 2> u3_matrix(Scalar theta, Scalar lambda, Scalar phi) {
    using C = std::complex<Scalar>;
    const Scalar c = std::cos(theta / 2), s = std::sin(theta / 2);
    Eigen::Matrix<C, 2, 2> m;
    m << C(c), -std::polar(s, lambda), std::polar(s, phi), std::polar(c, lambda + phi);
    return m;
}

template <typename Scalar>
Eigen::Matrix<std::complex<Scalar>, 2, 2> hadamard_matrix() {
    const Scalar r = Scalar(1) / std::sqrt(Scalar(2));
    Eigen::Matrix<std::complex<Scalar>, 2, 2> m;
    m << r, r, r, -r;
    return m;
}

/// 2x2 matrix of a single-target gate (controls excluded). Throws for SWAP.
template <typename Scalar>
Eigen::Matrix<std::complex<Scalar>, 2, 2> target_matrix(const Gate &g) {
    using C = std::complex<Scalar>;
    Eigen::Matrix<C, 2, 2> m;
    switch (g.kind) {
        case GateKind::H:
            return hadamard_matrix<Scalar>();
        case GateKind::U3:
            return u3_matrix<Scalar>(g.theta, g.lambda, g.phi);
        case GateKind::X:
        case GateKind::CNOT:
        case GateKind::TOFFOLI:
            m << C(0), C(1), C(1), C(0);
            return m;
        case GateKind::Y:
            m << C(0), C(0, -1), C(0, 1), C(0);
            return m;
        case GateKind::SWAP:
            break;
        default:
            m << C(1), C(0), C(0), std::polar(Scalar(1), static_cast<Scalar>(phase_angle(g)));
            return m;
    }
    throw std::invalid_argument("SWAP has no single-target matrix");
}

/// Full-precision state vector used as the exact-arithmetic proxy.
template <typename Scalar>
class BasicReferenceState {
  public:
    using Complex = std::complex<Scalar>;
    using Vector = StateVector<Scalar>;

    explicit BasicReferenceState(std::uint32_t qubits)
        : qubits_(qubits), amps_(Vector::Zero(Eigen::Index{1} << qubits)) {
        amps_(0) = Complex(1);
    }

    BasicReferenceState(std::uint32_t qubits, Vector amplitudes)
        : qubits_(qubits), amps_(std::move(amplitudes)) {
        if (amps_.size() != (Eigen::Index{1} << qubits)) {
            throw std::invalid_argument("amplitude count does not match qubit count");
        }
    }

    std::uint32_t qubits() const { return qubits_; }
    Eigen::Index size() const { return amps_.size(); }
    const Vector &amplitudes() const { return amps_; }
    Vector &amplitudes() { return amps_; }
    Complex operator[](Eigen::Index i) const { return amps_(i); }

    Scalar norm_squared() const { return amps_.squaredNorm(); }

  private:
    std::uint32_t qubits_;
    Vector amps_;
};

using ReferenceState = BasicReferenceState<double>;

/// Applies a gate in plain Scalar arithmetic, no conversions.
template <typename Scalar>
void apply_gate(BasicReferenceState<Scalar> &state, const Gate &g) {
    validate(g, state.qubits());
    auto &v = state.amplitudes();
    std::uint64_t cmask = 0;
    for (auto c : all_controls(g)) cmask |= std::uint64_t{1} << c;
    const auto n = static_cast<std::uint64_t>(v.size());

    if (g.kind == GateKind::SWAP) {
        const std::uint64_t pa = std::uint64_t{1} << g.qubits[0];
        const std::uint64_t pb = std::uint64_t{1} << g.qubits[1];
        for (std::uint64_t k = 0; k < n; ++k) {
            if ((k & cmask) == cmask && (k & pa) && !(k & pb)) std::swap(v(k), v(k ^ pa ^ pb));
        }
        return;
    }

    const std::uint64_t t = std::uint64_t{1} << targets(g)[0];
    const auto m = target_matrix<Scalar>(g);
    for (std::uint64_t k = 0; k < n; ++k) {
        if ((k & t) || (k & cmask) != cmask) continue;
        const auto a0 = v(k), a1 = v(k | t);
        v(k) = m(0, 0) * a0 + m(0, 1) * a1;
        v(k | t) = m(1, 0) * a0 + m(1, 1) * a1;
    }
}

template <typename Scalar>
void apply_circuit(BasicReferenceState<Scalar> &state, const Circuit &c) {
    for (const auto &g : c) apply_gate(state, g);
}

}  // namespace loqsim

#endif  // LOQSIM_REFERENCE_STATE_HPP
