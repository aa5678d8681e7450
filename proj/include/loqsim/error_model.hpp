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

#ifndef LOQSIM_ERROR_MODEL_HPP
#define LOQSIM_ERROR_MODEL_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "loqsim/format.hpp"
#include "loqsim/gate.hpp"

namespace loqsim {

/// Which per-conversion error drives the analysis: the expectation over
/// Porter-Thomas random states, or the worst-case (systematic) bound.
enum class Regime { random, biased };

Regime parse_regime(const std::string &name);
std::string to_string(Regime r);

/// Expected normalization mass lost to underflow for a random state,
/// 1 - (N mu^2 + 1) exp(-N mu^2) with N = 2^Q.
double underflow_loss(int qubits, const FormatSpec &spec);

/// Leading-order mean of |exp(eps + i gamma) - 1|^2 times 12:
/// 2^-2F + 4 pi^2 2^-2A.
double rounding_variance_term(const FormatSpec &spec);

/// Expected squared distance between a random state and its converted image.
double conversion_error_random(int qubits, const FormatSpec &spec);

/// Worst-case squared conversion error, N mu^2 + (2^-2F + 4 pi^2 2^-2A) / 4.
double conversion_error_bound(int qubits, const FormatSpec &spec);

/// sigma^2 after `g` effective gates with independent unbiased errors.
double cumulative_error_random(double g, int qubits, const FormatSpec &spec);

/// Upper bound on sigma (not sigma^2) after `g` gates with constant errors.
double cumulative_error_biased(double g, int qubits, const FormatSpec &spec);

/// Gate budget before the error reaches tolerance `sigma`: round(sigma^2 /
/// eps_c^2) for the random regime, round(sigma / eps_b) for the biased one.
std::uint64_t max_gates(double sigma, int qubits, const FormatSpec &spec, Regime regime);

/// Exhaustive search over E in [1, 8], F, A >= 2 with E + F + A = bits.
/// Ties go to the smaller E, then the smaller F.
FormatSpec optimal_triplet(int bits, int qubits, Regime regime);

/// Error the regime minimizes, i.e. the optimal_triplet objective.
double regime_error(int qubits, const FormatSpec &spec, Regime regime);

struct PhaseBitsEstimate {
    double exact;  // F + log2(2 pi)
    int lower;     // F + 2
    int upper;     // F + 3
};

/// Continuous optimum of A for a given F, plus its two integer neighbours.
PhaseBitsEstimate optimal_phase_bits(int fraction_bits);

/// (1 - sigma^2 / 2)^2; sigma^2 above 2 clamps to 0 with a warning on stderr.
double fidelity_lower_bound(double sigma_sq);

/// Phase increment, in units of 2 pi / 2^A, of a diagonal phase gate whose
/// angle is exactly representable; nullopt for lossy or non-phase gates.
std::optional<std::uint64_t> exact_phase_steps(const Gate &g, const FormatSpec &spec);

/// Fraction of amplitudes a gate exposes to rounding error.
double gate_weight(const Gate &g, const FormatSpec &spec);

/// Sum of gate_weight over the circuit.
double effective_gate_count(const Circuit &circuit, const FormatSpec &spec);

/// All analytic outputs for one (Q, spec, sigma).
struct ErrorBudget {
    int qubits = 0;
    double n = 0.0;
    FormatSpec spec;
    double phi = 0.0;
    double eps_c_sq = 0.0;
    double eps_b_sq = 0.0;
    std::uint64_t g_random = 0;
    std::uint64_t g_biased = 0;
    double fidelity_bound = 0.0;

    double sigma_sq_random(double g) const { return eps_c_sq * g; }
};

ErrorBudget error_budget(int qubits, const FormatSpec &spec, double sigma);

}  // namespace loqsim

#endif  // LOQSIM_ERROR_MODEL_HPP
