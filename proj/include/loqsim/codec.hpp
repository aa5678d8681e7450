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

#ifndef LOQSIM_CODEC_HPP
#define LOQSIM_CODEC_HPP

#include <complex>
#include <cstdint>
#include <optional>

#include "loqsim/format.hpp"
#include "loqsim/random.hpp"

namespace loqsim {

/// Largest modulus accepted by encode before it reports out-of-range.
inline constexpr double kModulusOvershoot = 0x1.0p-40;

/// Converts between double-precision complex amplitudes and packed words.
///
/// A packed word stores the fields most-significant-first as e|f|a, which is
/// the same as (n << A) | a with n = e * 2^F + f. The all-ones word is the
/// underflow code and decodes to exactly zero.
class Codec {
  public:
    explicit Codec(FormatSpec spec);

    const FormatSpec &spec() const { return spec_; }

    /// Rounds c to the nearest representable word. Throws InvalidAmplitude for
    /// non-finite input and AmplitudeOutOfRange above 1 + 2^-40.
    std::uint64_t encode(std::complex<double> c, RoundingMode mode, RandomStream &rng) const;
    std::uint64_t encode(std::complex<double> c) const;

    /// Same rounding rules, but any modulus above 1 saturates to 1. Used by the
    /// simulator, where an unnormalized state can legitimately overshoot.
    std::uint64_t encode_saturating(std::complex<double> c, RoundingMode mode,
                                    RandomStream &rng) const;

    std::complex<double> decode(std::uint64_t word) const;

    std::uint64_t underflow_word() const { return underflow_; }
    bool is_underflow(std::uint64_t word) const { return word == underflow_; }

    std::uint64_t log_index(std::uint64_t word) const { return word >> spec_.A; }
    std::uint64_t phase_index(std::uint64_t word) const { return word & phase_mask_; }
    std::uint64_t make_word(std::uint64_t log_index, std::uint64_t phase_index) const;

    /// Adds `steps` (mod 2^A) to the phase field; underflow stays underflow.
    std::uint64_t rotate(std::uint64_t word, std::uint64_t steps) const;

    PackedTriplet unpack(std::uint64_t word) const;
    std::uint64_t pack(PackedTriplet t) const;

  private:
    std::uint64_t encode_impl(std::complex<double> c, RoundingMode mode, RandomStream *rng) const;

    FormatSpec spec_;
    double log_scale_;
    double phase_scale_;
    std::uint64_t max_log_index_;
    std::uint64_t phase_mask_;
    std::uint64_t underflow_;
};

/// Encodes one amplitude into its (e, f, a) triplet.
PackedTriplet encode(std::complex<double> c, const FormatSpec &spec, RoundingMode mode,
                     RandomStream &rng);
PackedTriplet encode(std::complex<double> c, const FormatSpec &spec);

/// Decodes a triplet; the all-ones triplet decodes to exactly zero.
std::complex<double> decode(PackedTriplet t, const FormatSpec &spec);

double min_modulus(const FormatSpec &spec);

PackedTriplet underflow_triplet(const FormatSpec &spec);

/// Log-modulus and wrapped phase error of one conversion of c, or nullopt if
/// c underflows.
std::optional<ErrorSample> round_trip_error(std::complex<double> c, const FormatSpec &spec,
                                            RoundingMode mode, RandomStream &rng);

/// Wraps an angle into (-pi, pi].
double wrap_angle(double x);

}  // namespace loqsim

#endif  // LOQSIM_CODEC_HPP
