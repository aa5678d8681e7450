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

#include "loqsim/circuits.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "loqsim/numeric.hpp"
#include "loqsim/random.hpp"

namespace loqsim {

Circuit random_cycles(std::uint32_t qubits, std::uint32_t cycles, std::uint64_t seed) {
    if (qubits < 2) throw std::invalid_argument("random cycles need at least 2 qubits");
    constexpr double kPi = std::numbers::pi;
    Circuit c;
    c.reserve(2 * std::size_t{qubits} * cycles);
    for (std::uint32_t i = 1; i <= cycles; ++i) {
        for (std::uint32_t r = 0; r < qubits; ++r) {
            RandomStream signs(seed, std::uint64_t{qubits} * i + r);
            const double t = signs.coin() ? kPi / 2 : -kPi / 2;
            const double l = signs.coin() ? kPi / 4 : -kPi / 4;
            const double p = signs.coin() ? kPi / 4 : -kPi / 4;
            c.push_back(gates::u3(r, t, l, p));
            c.push_back(gates::cnot(r, (r + 1) % qubits));
        }
    }
    return c;
}

Circuit inverse(const Circuit &circuit) {
    Circuit out;
    out.reserve(circuit.size());
    for (auto it = circuit.rbegin(); it != circuit.rend(); ++it) out.push_back(adjoint(*it));
    return out;
}

namespace {

Circuit fourier(std::uint32_t qubits, std::uint32_t max_distance) {
    if (qubits < 1) throw std::invalid_argument("QFT needs at least one qubit");
    Circuit c;
    for (std::uint32_t p = qubits; p-- > 0;) {
        c.push_back(gates::h(p));
        for (std::uint32_t d = 1; d <= p && d <= max_distance; ++d) {
            c.push_back(gates::cp(p - d, p, d));
        }
    }
    for (std::uint32_t j = 0; j < qubits / 2; ++j) c.push_back(gates::swap(j, qubits - 1 - j));
    return c;
}

}  // namespace

Circuit qft(std::uint32_t qubits) { return fourier(qubits, qubits); }

std::uint32_t aqft_cutoff(std::uint32_t qubits) {
    if (qubits < 1) throw std::invalid_argument("AQFT needs at least one qubit");
    // floor(log2 q) is exact for integers.
    return 3 + static_cast<std::uint32_t>(std::bit_width(qubits) - 1);
}

Circuit aqft(std::uint32_t qubits) { return fourier(qubits, aqft_cutoff(qubits)); }

Circuit root_z_chain(std::uint32_t target, std::int64_t w, std::uint64_t count) {
    if (count < 1) throw std::invalid_argument("root-Z chain needs count >= 1");
    if (w < 1) throw std::invalid_argument("root-Z order W must be >= 1");
    return Circuit(count, gates::root_z(target, w));
}

Amplitudes plane_wave_state(std::uint32_t qubits, std::uint64_t x0) {
    const std::uint64_t n = std::uint64_t{1} << qubits;
    if (x0 >= n) throw std::out_of_range("plane wave x0 must be < 2^q");
    Amplitudes v(static_cast<Eigen::Index>(n));
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::uint64_t k = 0; k < n; ++k) {
        // k * x0 mod N keeps the angle argument small and exact.
        const std::uint64_t kx = (k * x0) & (n - 1);
        const double angle = -2.0 * std::numbers::pi * std::ldexp(static_cast<double>(kx), -static_cast<int>(qubits));
        v(static_cast<Eigen::Index>(k)) = std::polar(scale, angle);
    }
    return v;
}

Amplitudes random_sphere_state(std::uint32_t qubits, std::uint64_t seed) {
    const std::uint64_t n = std::uint64_t{1} << qubits;
    Amplitudes v(static_cast<Eigen::Index>(n));
    RandomStream rng(seed, 0x5350484552455ULL);
    for (std::uint64_t k = 0; k < n; ++k) {
        const double re = rng.normal();
        const double im = rng.normal();
        v(static_cast<Eigen::Index>(k)) = {re, im};
    }
    CompensatedSum norm_sq;
    for (std::uint64_t k = 0; k < n; ++k) norm_sq += std::norm(v(static_cast<Eigen::Index>(k)));
    v /= std::sqrt(norm_sq.value());
    return v;
}

Amplitudes basis_state(std::uint32_t qubits, std::uint64_t index) {
    const std::uint64_t n = std::uint64_t{1} << qubits;
    if (index >= n) throw std::out_of_range("basis index must be < 2^q");
    Amplitudes v = Amplitudes::Zero(static_cast<Eigen::Index>(n));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return v;
}

double true_error(const PackedState &final_state, std::uint64_t x0) {
    if (x0 >= final_state.size()) throw std::out_of_range("x0 must be < 2^q");
    CompensatedSum sum;
    for (std::uint64_t k = 0; k < final_state.size(); ++k) {
        const auto c = final_state.amplitude(k);
        sum += k == x0 ? std::norm(c - 1.0) : std::norm(c);
    }
    return sum.value();
}

}  // namespace loqsim
