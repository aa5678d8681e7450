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

#ifndef LOQSIM_GATE_HPP
#define LOQSIM_GATE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace loqsim {

enum class GateKind { H, X, Y, Z, CNOT, CZ, CP, SWAP, TOFFOLI, U3, ROOT_Z };

/// One gate of a circuit.
///
/// `qubits` holds the operands in mnemonic order (`CNOT c t`, `CP c t`,
/// `TOFF c1 c2 t`). `controls` holds additional controls on top of the ones
/// the kind already implies, so a controlled Hadamard is an H with one entry
/// in `controls`. `order` is m for CP (phase pi/2^m) and W for ROOT_Z (phase
/// pi/W); `adjoint` negates the phase of those two kinds.
struct Gate {
    GateKind kind = GateKind::H;
    std::vector<std::uint32_t> qubits;
    std::vector<std::uint32_t> controls;
    double theta = 0.0;
    double lambda = 0.0;
    double phi = 0.0;
    std::int64_t order = 0;
    bool adjoint = false;

    bool operator==(const Gate &) const = default;
};

using Circuit = std::vector<Gate>;

namespace gates {
Gate h(std::uint32_t q);
Gate x(std::uint32_t q);
Gate y(std::uint32_t q);
Gate z(std::uint32_t q);
Gate cnot(std::uint32_t control, std::uint32_t target);
Gate cz(std::uint32_t a, std::uint32_t b);
Gate cp(std::uint32_t control, std::uint32_t target, std::int64_t m);
Gate swap(std::uint32_t a, std::uint32_t b);
Gate toffoli(std::uint32_t c1, std::uint32_t c2, std::uint32_t target);
Gate u3(std::uint32_t q, double theta, double lambda, double phi);
Gate root_z(std::uint32_t q, std::int64_t w);
}  // namespace gates

/// Adds extra controls to a gate.
Gate controlled(Gate g, std::vector<std::uint32_t> extra_controls);

/// Number of operands the mnemonic takes.
std::size_t arity(GateKind kind);

std::string mnemonic(const Gate &g);

/// All control qubits: the ones implied by the kind plus the extra ones.
std::vector<std::uint32_t> all_controls(const Gate &g);

/// Qubits the base operation acts on (one, or two for SWAP).
std::vector<std::uint32_t> targets(const Gate &g);

/// Signed phase angle of a diagonal phase kind (Z, CZ, CP, ROOT_Z).
double phase_angle(const Gate &g);

bool is_phase_kind(GateKind kind);

/// The inverse gate. U3(t, l, p) inverts to U3(-t, -p, -l).
Gate adjoint(const Gate &g);

/// Throws std::out_of_range / std::invalid_argument if the gate is not valid
/// on `num_qubits` qubits.
void validate(const Gate &g, std::uint32_t num_qubits);

/// Smallest qubit count that accommodates every index in the circuit.
std::uint32_t min_qubits(const Circuit &c);

/// Text format, one gate per line, '#' comments:
///   H q | X q | Y q | Z q | CNOT c t | CZ a b | CP c t m | CPDG c t m |
///   SWAP p q | TOFF c1 c2 t | U3 q theta lambda phi | ROOTZ q W | ROOTZDG q W
/// Any line may end with `ctrl c1 c2 ...` for extra controls.
Circuit parse_circuit(std::istream &in);
Circuit parse_circuit(const std::string &text);
void write_circuit(std::ostream &out, const Circuit &c);
std::string format_gate(const Gate &g);
std::string format_circuit(const Circuit &c);

}  // namespace loqsim

#endif  // LOQSIM_GATE_HPP
