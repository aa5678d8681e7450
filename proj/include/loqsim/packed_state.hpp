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

#ifndef LOQSIM_PACKED_STATE_HPP
#define LOQSIM_PACKED_STATE_HPP

#include <complex>
#include <cstdint>

#include "loqsim/codec.hpp"
#include "loqsim/packed_words.hpp"
#include "loqsim/reference_state.hpp"

namespace loqsim {

/// State vector of 2^q amplitudes, each held as one packed log-polar word.
///
/// The state owns the master seed for its stochastic conversions. Every
/// lossy operation takes a fresh epoch number and amplitude k of that
/// operation draws from RandomStream(seed, epoch, k), so results do not depend
/// on iteration order.
class PackedState {
  public:
    /// The basis state |0...0>.
    PackedState(std::uint32_t qubits, FormatSpec spec, RoundingMode mode = {}, std::uint64_t seed = 0);

    /// Adopts already-packed words (e.g. loaded from a file).
    PackedState(std::uint32_t qubits, FormatSpec spec, PackedWords words, RoundingMode mode = {},
                std::uint64_t seed = 0);

    std::uint32_t qubits() const { return qubits_; }
    std::uint64_t size() const { return std::uint64_t{1} << qubits_; }
    const FormatSpec &spec() const { return codec_.spec(); }
    const Codec &codec() const { return codec_; }

    RoundingMode mode() const { return mode_; }
    void set_mode(RoundingMode mode) { mode_ = mode; }
    std::uint64_t seed() const { return seed_; }

    const PackedWords &words() const { return words_; }
    std::uint64_t word(std::uint64_t k) const { return words_.get(k); }
    void set_word(std::uint64_t k, std::uint64_t w) { words_.set(k, w); }
    void swap_words(std::uint64_t i, std::uint64_t j) { words_.swap(i, j); }

    std::complex<double> amplitude(std::uint64_t k) const { return codec_.decode(words_.get(k)); }
    Amplitudes decoded() const;

    double effective_g() const { return effective_g_; }
    void add_effective_g(double beta) { effective_g_ += beta; }

    /// Starts a new conversion epoch and returns its number.
    std::uint64_t next_epoch() { return ++epoch_; }
    RandomStream stream(std::uint64_t epoch, std::uint64_t k) const {
        return RandomStream(seed_, epoch, k);
    }

    bool operator==(const PackedState &o) const {
        return qubits_ == o.qubits_ && spec() == o.spec() && words_ == o.words_;
    }

  private:
    std::uint32_t qubits_;
    Codec codec_;
    PackedWords words_;
    RoundingMode mode_;
    std::uint64_t seed_;
    std::uint64_t epoch_ = 0;
    double effective_g_ = 0.0;
};

/// Deterministically encodes a normalized amplitude vector. Throws
/// std::invalid_argument if the squared norm is off by more than 1e-6.
PackedState init_state(std::uint32_t qubits, const FormatSpec &spec, RoundingMode mode,
                       const Amplitudes &initial, std::uint64_t seed = 0);

}  // namespace loqsim

#endif  // LOQSIM_PACKED_STATE_HPP
