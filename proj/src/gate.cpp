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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "loqsim/gate.hpp"

namespace loqsim {

namespace gates {

Gate h(std::uint32_t q) { return Gate{.kind = GateKind::H, .qubits = {q}}; }
Gate x(std::uint32_t q) { return Gate{.kind = GateKind::X, .qubits = {q}}; }
Gate y(std::uint32_t q) { return Gate{.kind = GateKind::Y, .qubits = {q}}; }
Gate z(std::uint32_t q) { return Gate{.kind = GateKind::Z, .qubits = {q}}; }

Gate cnot(std::uint32_t control, std::uint32_t target) {
    return Gate{.kind = GateKind::CNOT, .qubits = {control, target}};
}

Gate cz(std::uint32_t a, std::uint32_t b) { return Gate{.kind = GateKind::CZ, .qubits = {a, b}}; }

Gate cp(std::uint32_t control, std::uint32_t target, std::int64_t m) {
    return Gate{.kind = GateKind::CP, .qubits = {control, target}, .order = m};
}

Gate swap(std::uint32_t a, std::uint32_t b) { return Gate{.kind = GateKind::SWAP, .qubits = {a, b}}; }

Gate toffoli(std::uint32_t c1, std::uint32_t c2, std::uint32_t target) {
    return Gate{.kind = GateKind::TOFFOLI, .qubits = {c1, c2, target}};
}

Gate u3(std::uint32_t q, double theta, double lambda, double phi) {
    return Gate{.kind = GateKind::U3, .qubits = {q}, .theta = theta, .lambda = lambda, .phi = phi};
}

Gate root_z(std::uint32_t q, std::int64_t w) {
    return Gate{.kind = GateKind::ROOT_Z, .qubits = {q}, .order = w};
}

}  // namespace gates

Gate controlled(Gate g, std::vector<std::uint32_t> extra_controls) {
    g.controls.insert(g.controls.end(), extra_controls.begin(), extra_controls.end());
    return g;
}

std::size_t arity(GateKind kind) {
    switch (kind) {
        case GateKind::H:
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z:
        case GateKind::U3:
        case GateKind::ROOT_Z:
            return 1;
        case GateKind::CNOT:
        case GateKind::CZ:
        case GateKind::CP:
        case GateKind::SWAP:
            return 2;
        case GateKind::TOFFOLI:
            return 3;
    }
    throw std::invalid_argument("unknown gate kind");
}

std::string mnemonic(const Gate &g) {
    switch (g.kind) {
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::CNOT: return "CNOT";
        case GateKind::CZ: return "CZ";
        case GateKind::CP: return g.adjoint ? "CPDG" : "CP";
        case GateKind::SWAP: return "SWAP";
        case GateKind::TOFFOLI: return "TOFF";
        case GateKind::U3: return "U3";
        case GateKind::ROOT_Z: return g.adjoint ? "ROOTZDG" : "ROOTZ";
    }
    throw std::invalid_argument("unknown gate kind");
}

bool is_phase_kind(GateKind kind) {
    return kind == GateKind::Z || kind == GateKind::CZ || kind == GateKind::CP ||
           kind == GateKind::ROOT_Z;
}

std::vector<std::uint32_t> all_controls(const Gate &g) {
    std::vector<std::uint32_t> out;
    switch (g.kind) {
        case GateKind::CNOT:
        case GateKind::CZ:
        case GateKind::CP:
            out.push_back(g.qubits.at(0));
            break;
        case GateKind::TOFFOLI:
            out.push_back(g.qubits.at(0));
            out.push_back(g.qubits.at(1));
            break;
        default:
            break;
    }
    out.insert(out.end(), g.controls.begin(), g.controls.end());
    return out;
}

std::vector<std::uint32_t> targets(const Gate &g) {
    switch (g.kind) {
        case GateKind::SWAP:
            return {g.qubits.at(0), g.qubits.at(1)};
        case GateKind::CNOT:
        case GateKind::CZ:
        case GateKind::CP:
            return {g.qubits.at(1)};
        case GateKind::TOFFOLI:
            return {g.qubits.at(2)};
        default:
            return {g.qubits.at(0)};
    }
}

double phase_angle(const Gate &g) {
    double angle = 0.0;
    switch (g.kind) {
        case GateKind::Z:
        case GateKind::CZ:
            angle = std::numbers::pi;
            break;
        case GateKind::CP:
            angle = std::ldexp(std::numbers::pi, -static_cast<int>(g.order));
            break;
        case GateKind::ROOT_Z:
            angle = std::numbers::pi / static_cast<double>(g.order);
            break;
        default:
            throw std::invalid_argument("gate " + mnemonic(g) + " is not a phase gate");
    }
    return g.adjoint ? -angle : angle;
}

Gate adjoint(const Gate &g) {
    Gate inv = g;
    switch (g.kind) {
        case GateKind::U3:
            inv.theta = -g.theta;
            inv.lambda = -g.phi;
            inv.phi = -g.lambda;
            break;
        case GateKind::CP:
        case GateKind::ROOT_Z:
            inv.adjoint = !g.adjoint;
            break;
        default:
            break;
    }
    return inv;
}

void validate(const Gate &g, std::uint32_t num_qubits) {
    if (g.qubits.size() != arity(g.kind)) {
        throw std::invalid_argument(mnemonic(g) + " takes " + std::to_string(arity(g.kind)) +
                                    " qubits");
    }
    std::vector<std::uint32_t> all = g.qubits;
    all.insert(all.end(), g.controls.begin(), g.controls.end());
    for (auto q : all) {
        if (q >= num_qubits) {
            throw std::out_of_range(mnemonic(g) + ": qubit " + std::to_string(q) +
                                    " out of range for " + std::to_string(num_qubits) + " qubits");
        }
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw std::invalid_argument(mnemonic(g) + ": qubit indices must be distinct");
    }
    if (g.kind == GateKind::CP && (g.order < 0 || g.order > 1023)) {
        throw std::invalid_argument("CP: m must be in [0, 1023]");
    }
    if (g.kind == GateKind::ROOT_Z && g.order < 1) {
        throw std::invalid_argument("ROOTZ: W must be >= 1");
    }
    if (g.kind == GateKind::U3 &&
        !(std::isfinite(g.theta) && std::isfinite(g.lambda) && std::isfinite(g.phi))) {
        throw std::invalid_argument("U3: angles must be finite");
    }
}

std::uint32_t min_qubits(const Circuit &c) {
    std::uint32_t n = 0;
    for (const auto &g : c) {
        for (auto q : g.qubits) n = std::max(n, q + 1);
        for (auto q : g.controls) n = std::max(n, q + 1);
    }
    return n;
}

}  // namespace loqsim
