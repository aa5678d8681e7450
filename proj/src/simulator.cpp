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

#include "loqsim/simulator.hpp"

#include <cmath>
#include <stdexcept>

#include "loqsim/error_model.hpp"
#include "loqsim/numeric.hpp"

namespace loqsim {

namespace {

std::uint64_t mask_of(const std::vector<std::uint32_t> &qubits) {
    std::uint64_t m = 0;
    for (auto q : qubits) m |= std::uint64_t{1} << q;
    return m;
}

void rotate_lossy(PackedState &state, double angle, bool jitter,
                  const std::function<bool(std::uint64_t)> &affected) {
    const Codec &codec = state.codec();
    const std::uint64_t epoch = state.next_epoch();
    const RoundingMode mode{false, jitter};
    const std::complex<double> factor = std::polar(1.0, angle);
    for (std::uint64_t k = 0; k < state.size(); ++k) {
        if (!affected(k)) continue;
        const std::uint64_t w = state.word(k);
        if (codec.is_underflow(w)) continue;
        RandomStream rng = state.stream(epoch, k);
        state.set_word(k, codec.encode_saturating(codec.decode(w) * factor, mode, rng));
    }
}

template <typename Matrix>
void apply_matrix(PackedState &state, const Matrix &m, std::uint64_t t, std::uint64_t cmask) {
    const Codec &codec = state.codec();
    const std::uint64_t epoch = state.next_epoch();
    const RoundingMode mode = state.mode();
    for (std::uint64_t k = 0; k < state.size(); ++k) {
        if ((k & t) || (k & cmask) != cmask) continue;
        const std::uint64_t j = k | t;
        const auto a0 = codec.decode(state.word(k));
        const auto a1 = codec.decode(state.word(j));
        RandomStream r0 = state.stream(epoch, k);
        RandomStream r1 = state.stream(epoch, j);
        state.set_word(k, codec.encode_saturating(m(0, 0) * a0 + m(0, 1) * a1, mode, r0));
        state.set_word(j, codec.encode_saturating(m(1, 0) * a0 + m(1, 1) * a1, mode, r1));
    }
}

}  // namespace

void apply_gate(PackedState &state, const Gate &g) {
    validate(g, state.qubits());
    const Codec &codec = state.codec();
    const std::uint64_t cmask = mask_of(all_controls(g));
    const std::uint64_t n = state.size();

    switch (g.kind) {
        case GateKind::X:
        case GateKind::CNOT:
        case GateKind::TOFFOLI: {
            const std::uint64_t t = std::uint64_t{1} << targets(g)[0];
            for (std::uint64_t k = 0; k < n; ++k) {
                if (!(k & t) && (k & cmask) == cmask) state.swap_words(k, k | t);
            }
            break;
        }
        case GateKind::SWAP: {
            const std::uint64_t pa = std::uint64_t{1} << g.qubits[0];
            const std::uint64_t pb = std::uint64_t{1} << g.qubits[1];
            for (std::uint64_t k = 0; k < n; ++k) {
                if ((k & cmask) == cmask && (k & pa) && !(k & pb)) state.swap_words(k, k ^ pa ^ pb);
            }
            break;
        }
        case GateKind::Y: {
            // Y|0> = i|1>, Y|1> = -i|0>.
            const std::uint64_t t = std::uint64_t{1} << targets(g)[0];
            const std::uint64_t quarter = state.spec().phase_count() / 4;
            for (std::uint64_t k = 0; k < n; ++k) {
                if ((k & t) || (k & cmask) != cmask) continue;
                const std::uint64_t w0 = state.word(k), w1 = state.word(k | t);
                state.set_word(k, codec.rotate(w1, 3 * quarter));
                state.set_word(k | t, codec.rotate(w0, quarter));
            }
            break;
        }
        case GateKind::Z:
        case GateKind::CZ:
        case GateKind::CP:
        case GateKind::ROOT_Z: {
            const std::uint64_t sel = cmask | (std::uint64_t{1} << targets(g)[0]);
            if (auto steps = exact_phase_steps(g, state.spec())) {
                for (std::uint64_t k = 0; k < n; ++k) {
                    if ((k & sel) == sel) state.set_word(k, codec.rotate(state.word(k), *steps));
                }
            } else {
                rotate_lossy(state, phase_angle(g), state.mode().phase_jitter,
                             [sel](std::uint64_t k) { return (k & sel) == sel; });
            }
            break;
        }
        case GateKind::H:
        case GateKind::U3:
            apply_matrix(state, target_matrix<double>(g), std::uint64_t{1} << targets(g)[0], cmask);
            break;
    }
    state.add_effective_g(gate_weight(g, state.spec()));
}

double norm_squared(const PackedState &state) {
    CompensatedSum sum;
    for (std::uint64_t k = 0; k < state.size(); ++k) sum += std::norm(state.amplitude(k));
    return sum.value();
}

void renormalize(PackedState &state) {
    const double norm_sq = norm_squared(state);
    if (!(norm_sq > 0.0)) throw std::domain_error("cannot renormalize a zero state");
    const double inv = 1.0 / std::sqrt(norm_sq);
    const Codec &codec = state.codec();
    const std::uint64_t epoch = state.next_epoch();
    const RoundingMode mode{state.mode().modulus_jitter, false};
    for (std::uint64_t k = 0; k < state.size(); ++k) {
        const std::uint64_t w = state.word(k);
        if (codec.is_underflow(w)) continue;
        RandomStream rng = state.stream(epoch, k);
        state.set_word(k, codec.encode_saturating(codec.decode(w) * inv, mode, rng));
    }
}

double default_norm_threshold(const FormatSpec &spec) { return spec.log_step(); }

bool maybe_renormalize(PackedState &state, std::optional<double> threshold) {
    const double eta = threshold.value_or(default_norm_threshold(state.spec()));
    if (!(eta > 0)) throw std::invalid_argument("renormalization threshold must be > 0");
    if (std::abs(norm_squared(state) - 1.0) > eta) {
        renormalize(state);
        return true;
    }
    return false;
}

void phase_jitter_pass(PackedState &state, double angle,
                       const std::function<bool(std::uint64_t)> &affected) {
    rotate_lossy(state, angle, true, affected);
}

double distance_squared(const PackedState &state, const ReferenceState &reference) {
    if (reference.qubits() != state.qubits()) {
        throw std::invalid_argument("packed and reference states differ in qubit count");
    }
    CompensatedSum sum;
    for (std::uint64_t k = 0; k < state.size(); ++k) {
        sum += std::norm(state.amplitude(k) - reference[static_cast<Eigen::Index>(k)]);
    }
    return sum.value();
}

RunReport run(PackedState &state, const Circuit &circuit, ReferenceState *reference,
              const RunOptions &options) {
    if (reference && reference->qubits() != state.qubits()) {
        throw std::invalid_argument("packed and reference states differ in qubit count");
    }
    for (const auto &g : circuit) validate(g, state.qubits());

    RunReport report;
    auto record = [&] {
        report.effective_g.push_back(state.effective_g());
        if (options.trace_norm) report.norm_sq.push_back(norm_squared(state));
        if (reference) report.sigma_sq.push_back(distance_squared(state, *reference));
    };
    record();
    for (const auto &g : circuit) {
        apply_gate(state, g);
        if (reference) apply_gate(*reference, g);
        if (options.norm_threshold && maybe_renormalize(state, options.norm_threshold)) {
            ++report.renormalizations;
        }
        record();
    }
    return report;
}

}  // namespace loqsim
