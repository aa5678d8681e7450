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

#include "loqsim/packed_state.hpp"

#include <cmath>
#include <stdexcept>

namespace loqsim {

PackedState::PackedState(std::uint32_t qubits, FormatSpec spec, RoundingMode mode, std::uint64_t seed)
    : qubits_(qubits), codec_(spec), mode_(mode), seed_(seed) {
    if (qubits > 40) throw std::invalid_argument("qubit count too large");
    words_ = PackedWords(size(), spec.word_bytes(), codec_.underflow_word());
    words_.set(0, codec_.make_word(0, 0));
}

PackedState::PackedState(std::uint32_t qubits, FormatSpec spec, PackedWords words, RoundingMode mode,
                         std::uint64_t seed)
    : qubits_(qubits), codec_(spec), words_(std::move(words)), mode_(mode), seed_(seed) {
    if (words_.size() != size() || words_.word_bytes() != spec.word_bytes()) {
        throw std::invalid_argument("packed word array does not match qubit count and format");
    }
}

Amplitudes PackedState::decoded() const {
    Amplitudes out(static_cast<Eigen::Index>(size()));
    for (std::uint64_t k = 0; k < size(); ++k) out(static_cast<Eigen::Index>(k)) = amplitude(k);
    return out;
}

PackedState init_state(std::uint32_t qubits, const FormatSpec &spec, RoundingMode mode,
                       const Amplitudes &initial, std::uint64_t seed) {
    if (initial.size() != (Eigen::Index{1} << qubits)) {
        throw std::invalid_argument("initial state must have 2^q amplitudes");
    }
    const double norm_sq = initial.squaredNorm();
    if (!(std::abs(norm_sq - 1.0) <= 1e-6)) {
        throw std::invalid_argument("initial state is not normalized (norm^2 = " +
                                    std::to_string(norm_sq) + ")");
    }
    PackedState state(qubits, spec, mode, seed);
    const Codec &codec = state.codec();
    RandomStream unused(seed);
    for (std::uint64_t k = 0; k < state.size(); ++k) {
        state.set_word(k, codec.encode_saturating(initial(static_cast<Eigen::Index>(k)),
                                                  RoundingMode::deterministic(), unused));
    }
    return state;
}

}  // namespace loqsim
