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

#ifndef LOQSIM_SIMULATOR_HPP
#define LOQSIM_SIMULATOR_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "loqsim/gate.hpp"
#include "loqsim/packed_state.hpp"
#include "loqsim/reference_state.hpp"

namespace loqsim {

/// Applies one gate to the packed state.
///
/// X, Y, CNOT, SWAP, TOFF permute words (Y also shifts phases by a quarter
/// turn); Z, CZ and phase gates whose angle is a multiple of the phase step
/// add an integer to the a-field. Those are bit-exact. Everything else
/// decodes the touched amplitudes, applies the update in double precision
/// and re-encodes with the state's rounding mode. Lossy phase rotations leave
/// the modulus alone and only honour phase_jitter. The gate's weight is added
/// to the state's effective gate count.
void apply_gate(PackedState &state, const Gate &g);

/// Squared norm of the decoded state, compensated summation.
double norm_squared(const PackedState &state);

/// Divides every amplitude by the norm and re-encodes. With the state's
/// modulus_jitter set, each log-modulus gets a uniform offset in
/// (-2^-F-1, 2^-F-1) first so the rounded result is unbiased. Throws
/// std::domain_error on a zero state.
void renormalize(PackedState &state);

/// 2^-F, one log-modulus step.
double default_norm_threshold(const FormatSpec &spec);

/// Renormalizes iff |norm^2 - 1| > threshold. Returns whether it did.
bool maybe_renormalize(PackedState &state, std::optional<double> threshold = std::nullopt);

/// Rotates every amplitude selected by `affected` by `angle` and re-encodes
/// its phase with a uniform offset in (-pi 2^-A, pi 2^-A).
void phase_jitter_pass(PackedState &state, double angle,
                       const std::function<bool(std::uint64_t)> &affected);

/// sum_k |decode(word_k) - ref_k|^2, compensated summation.
double distance_squared(const PackedState &state, const ReferenceState &reference);

struct RunOptions {
    /// Renormalization threshold applied after every gate; nullopt disables.
    std::optional<double> norm_threshold;
    bool trace_norm = true;
};

/// Per-gate traces. Entry 0 is the state before the first gate, entry i the
/// state after gate i.
struct RunReport {
    std::vector<double> effective_g;
    std::vector<double> norm_sq;
    std::vector<double> sigma_sq;  // empty without a reference
    std::size_t renormalizations = 0;
};

/// Applies the circuit to the packed state, and to `reference` (if given) in
/// exact double arithmetic.
RunReport run(PackedState &state, const Circuit &circuit, ReferenceState *reference = nullptr,
              const RunOptions &options = {});

}  // namespace loqsim

#endif  // LOQSIM_SIMULATOR_HPP
