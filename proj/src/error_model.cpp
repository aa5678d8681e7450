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

#include "loqsim/error_model.hpp"

#include <bit>
#include <cmath>
#include <iostream>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace loqsim {

namespace {

double n_mu_sq(int qubits, const FormatSpec &spec) {
    if (qubits < 1) throw std::invalid_argument("qubit count must be >= 1");
    const double mu = spec.min_modulus();
    return std::ldexp(mu * mu, qubits);
}

}  // namespace

Regime parse_regime(const std::string &name) {
    if (name == "random") return Regime::random;
    if (name == "biased") return Regime::biased;
    throw std::invalid_argument("regime must be 'random' or 'biased', got '" + name + "'");
}

std::string to_string(Regime r) { return r == Regime::random ? "random" : "biased"; }

double underflow_loss(int qubits, const FormatSpec &spec) {
    const double x = n_mu_sq(qubits, spec);
    if (x >= 0.5) return -std::expm1(-x) - x * std::exp(-x);
    // The closed form cancels to ~x^2/2 from two terms of size x; sum
    // (-1)^k (k-1) x^k / k! instead.
    double term = x * x / 2.0;  // x^k / k! at k = 2
    double sum = term;
    for (int k = 3; k < 40; ++k) {
        term *= x / k;
        const double t = (k % 2 ? -1.0 : 1.0) * (k - 1) * term;
        sum += t;
        if (std::abs(t) < 1e-18 * sum) break;
    }
    return sum;
}

double rounding_variance_term(const FormatSpec &spec) {
    constexpr double kFourPiSq = 4.0 * std::numbers::pi * std::numbers::pi;
    return std::ldexp(1.0, -2 * spec.F) + kFourPiSq * std::ldexp(1.0, -2 * spec.A);
}

double conversion_error_random(int qubits, const FormatSpec &spec) {
    const double phi = underflow_loss(qubits, spec);
    return phi + (1.0 - phi) * rounding_variance_term(spec) / 12.0;
}

double conversion_error_bound(int qubits, const FormatSpec &spec) {
    return n_mu_sq(qubits, spec) + rounding_variance_term(spec) / 4.0;
}

double cumulative_error_random(double g, int qubits, const FormatSpec &spec) {
    if (g < 0) throw std::invalid_argument("gate count must be >= 0");
    return conversion_error_random(qubits, spec) * g;
}

double cumulative_error_biased(double g, int qubits, const FormatSpec &spec) {
    if (g < 0) throw std::invalid_argument("gate count must be >= 0");
    return g * std::sqrt(conversion_error_bound(qubits, spec));
}

std::uint64_t max_gates(double sigma, int qubits, const FormatSpec &spec, Regime regime) {
    if (!(sigma >= 0)) throw std::invalid_argument("tolerance must be >= 0");
    const double g = regime == Regime::random
                         ? sigma * sigma / conversion_error_random(qubits, spec)
                         : sigma / std::sqrt(conversion_error_bound(qubits, spec));
    return static_cast<std::uint64_t>(std::llround(g));
}

double regime_error(int qubits, const FormatSpec &spec, Regime regime) {
    return regime == Regime::random ? conversion_error_random(qubits, spec)
                                    : conversion_error_bound(qubits, spec);
}

FormatSpec optimal_triplet(int bits, int qubits, Regime regime) {
    if (bits < 3) throw std::invalid_argument("need at least 3 bits, got " + std::to_string(bits));
    if (bits > 64) throw std::invalid_argument("at most 64 bits, got " + std::to_string(bits));
    FormatSpec best{};
    double best_err = std::numeric_limits<double>::infinity();
    for (int e = 1; e <= 8; ++e) {
        for (int f = 0; e + f + 2 <= bits; ++f) {
            const FormatSpec cand{e, f, bits - e - f};
            const double err = regime_error(qubits, cand, regime);
            // Strict comparison keeps the first (smallest E, then F) of equals.
            if (err < best_err) {
                best_err = err;
                best = cand;
            }
        }
    }
    if (!std::isfinite(best_err)) {
        throw std::invalid_argument("no feasible triplet for B=" + std::to_string(bits));
    }
    return best;
}

PhaseBitsEstimate optimal_phase_bits(int fraction_bits) {
    if (fraction_bits < 0) throw std::invalid_argument("F must be >= 0");
    return {fraction_bits + std::log2(2.0 * std::numbers::pi), fraction_bits + 2, fraction_bits + 3};
}

double fidelity_lower_bound(double sigma_sq) {
    if (sigma_sq < 0) throw std::invalid_argument("sigma^2 must be >= 0");
    if (sigma_sq > 2.0) {
        std::clog << "warning: sigma^2 = " << sigma_sq << " > 2, fidelity bound clamped to 0\n";
        return 0.0;
    }
    const double t = 1.0 - sigma_sq / 2.0;
    return t * t;
}

std::optional<std::uint64_t> exact_phase_steps(const Gate &g, const FormatSpec &spec) {
    std::int64_t shift = 0;  // phase = pi / 2^shift
    switch (g.kind) {
        case GateKind::Z:
        case GateKind::CZ:
            shift = 0;
            break;
        case GateKind::CP:
            shift = g.order;
            break;
        case GateKind::ROOT_Z:
            if (g.order < 1 || !std::has_single_bit(static_cast<std::uint64_t>(g.order))) {
                return std::nullopt;
            }
            shift = std::countr_zero(static_cast<std::uint64_t>(g.order));
            break;
        default:
            return std::nullopt;
    }
    if (shift < 0 || shift >= spec.A) return std::nullopt;
    const std::uint64_t steps = std::uint64_t{1} << (spec.A - shift - 1);
    const std::uint64_t mask = spec.phase_count() - 1;
    return g.adjoint ? (spec.phase_count() - steps) & mask : steps;
}

double gate_weight(const Gate &g, const FormatSpec &spec) {
    double base = 0.0;
    switch (g.kind) {
        case GateKind::X:
        case GateKind::Y:
        case GateKind::CNOT:
        case GateKind::SWAP:
        case GateKind::TOFFOLI:
            return 0.0;
        case GateKind::Z:
        case GateKind::CZ:
        case GateKind::CP:
        case GateKind::ROOT_Z:
            if (exact_phase_steps(g, spec)) return 0.0;
            base = 0.5;
            break;
        case GateKind::H:
        case GateKind::U3:
            base = 1.0;
            break;
        default:
            throw std::invalid_argument("unknown gate kind in effective gate count");
    }
    return std::ldexp(base, -static_cast<int>(all_controls(g).size()));
}

double effective_gate_count(const Circuit &circuit, const FormatSpec &spec) {
    double g = 0.0;
    for (const auto &gate : circuit) g += gate_weight(gate, spec);
    return g;
}

ErrorBudget error_budget(int qubits, const FormatSpec &spec, double sigma) {
    ErrorBudget b;
    b.qubits = qubits;
    b.n = std::ldexp(1.0, qubits);
    b.spec = spec;
    b.phi = underflow_loss(qubits, spec);
    b.eps_c_sq = conversion_error_random(qubits, spec);
    b.eps_b_sq = conversion_error_bound(qubits, spec);
    b.g_random = max_gates(sigma, qubits, spec, Regime::random);
    b.g_biased = max_gates(sigma, qubits, spec, Regime::biased);
    b.fidelity_bound = fidelity_lower_bound(sigma * sigma);
    return b;
}

}  // namespace loqsim
