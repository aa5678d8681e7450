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

#ifndef LOQSIM_FORMAT_HPP
#define LOQSIM_FORMAT_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace loqsim {

/// Thrown for NaN/Inf amplitudes handed to the codec.
struct InvalidAmplitude : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown for amplitudes whose modulus exceeds 1 + 2^-40.
struct AmplitudeOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Bit allocation (E, F, A) of the log-polar amplitude word.
///
/// An amplitude is stored as exp(-(e + f / 2^F) + 2 pi i a / 2^A) with
/// e < 2^E, f < 2^F, a < 2^A. The integer and fractional exponent fields are
/// adjacent in the packed word, so the combined log index n = e * 2^F + f is
/// what the codec actually rounds.
struct FormatSpec {
    int E = 4;
    int F = 5;
    int A = 7;

    /// Validating constructor: 1 <= E <= 8, F >= 0, A >= 2, E + F + A <= 64.
    static FormatSpec make(int e, int f, int a);

    /// Parses "E,F,A".
    static FormatSpec parse(const std::string &text);

    void validate() const;

    int bits() const { return E + F + A; }
    std::size_t word_bytes() const { return static_cast<std::size_t>((bits() + 7) / 8); }

    /// Number of fractional steps per unit of log-modulus.
    double log_scale() const;
    /// Spacing of the log-modulus grid, 2^-F.
    double log_step() const;
    /// Spacing of the phase grid, 2 pi 2^-A.
    double phase_step() const;

    std::uint64_t phase_count() const { return std::uint64_t{1} << A; }
    /// Largest combined log index, 2^(E+F) - 1.
    std::uint64_t max_log_index() const { return (std::uint64_t{1} << (E + F)) - 1; }

    /// Smallest nonzero modulus, exp(-2^E + 2^-F).
    double min_modulus() const;

    std::string str() const;

    bool operator==(const FormatSpec &) const = default;
};

/// The (e, f, a) integer fields of one amplitude.
struct PackedTriplet {
    std::uint64_t e = 0;
    std::uint64_t f = 0;
    std::uint64_t a = 0;

    bool operator==(const PackedTriplet &) const = default;
};

/// Optional stochastic perturbations applied before rounding.
struct RoundingMode {
    bool modulus_jitter = false;
    bool phase_jitter = false;

    static constexpr RoundingMode deterministic() { return {}; }
    static constexpr RoundingMode stochastic() { return {true, true}; }

    bool operator==(const RoundingMode &) const = default;
};

/// Log-modulus error eps and phase error gamma of one conversion.
struct ErrorSample {
    double eps = 0.0;
    double gamma = 0.0;
};

}  // namespace loqsim

#endif  // LOQSIM_FORMAT_HPP
