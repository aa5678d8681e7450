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

#ifndef LOQSIM_CIRCUITS_HPP
#define LOQSIM_CIRCUITS_HPP

#include <cstdint>

#include "loqsim/gate.hpp"
#include "loqsim/packed_state.hpp"
#include "loqsim/reference_state.hpp"

namespace loqsim {

/// C cycles of U3(r, +-pi/2, +-pi/4, +-pi/4) then CNOT(r, (r+1) mod q) for
/// every qubit r. The three signs of the U3 with index k = q*i + r (cycles
/// counted from 1) come from RandomStream(seed, k).
Circuit random_cycles(std::uint32_t qubits, std::uint32_t cycles, std::uint64_t seed);

/// Reversed gate order, each gate replaced by its adjoint.
Circuit inverse(const Circuit &circuit);

/// Quantum Fourier transform on basis index bits, qubit q-1 most significant:
/// H then controlled phases pi/2^d from every lower qubit at distance d,
/// followed by the qubit-order reversing swaps.
Circuit qft(std::uint32_t qubits);

/// floor(3 + log2 q), the largest controlled-phase distance an AQFT keeps.
std::uint32_t aqft_cutoff(std::uint32_t qubits);

/// QFT with controlled phases beyond aqft_cutoff dropped.
Circuit aqft(std::uint32_t qubits);

/// `count` applications of ROOTZ(W) to `target`.
Circuit root_z_chain(std::uint32_t target, std::int64_t w, std::uint64_t count);

/// c_k = exp(-2 pi i k x0 / N) / sqrt(N); the QFT maps it to |x0>.
Amplitudes plane_wave_state(std::uint32_t qubits, std::uint64_t x0);

/// Independent standard-normal real and imaginary parts, normalized.
Amplitudes random_sphere_state(std::uint32_t qubits, std::uint64_t seed);

Amplitudes basis_state(std::uint32_t qubits, std::uint64_t index);

/// |c_x0 - 1|^2 + sum_{k != x0} |c_k|^2 over decoded amplitudes.
double true_error(const PackedState &final_state, std::uint64_t x0);

}  // namespace loqsim

#endif  // LOQSIM_CIRCUITS_HPP
