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

#include "loqsim/codec.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace loqsim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// A decoded word with log index n_max re-encodes to a log value that can sit
// a few ulps above n_max. Anything within this many log steps of the
// smallest modulus is treated as the smallest modulus, not as underflow.
constexpr double kUnderflowSlack = 1e-9;

int parse_int(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("bad integer in triplet: '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

FormatSpec FormatSpec::make(int e, int f, int a) {
    FormatSpec s{e, f, a};
    s.validate();
    return s;
}

FormatSpec FormatSpec::parse(const std::string &text) {
    std::string_view v(text);
    auto c1 = v.find(',');
    auto c2 = c1 == std::string_view::npos ? c1 : v.find(',', c1 + 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos) {
        throw std::invalid_argument("triplet must be E,F,A: '" + text + "'");
    }
    return make(parse_int(v.substr(0, c1)), parse_int(v.substr(c1 + 1, c2 - c1 - 1)),
                parse_int(v.substr(c2 + 1)));
}

void FormatSpec::validate() const {
    if (E < 1 || E > 8) throw std::invalid_argument("E must be in [1, 8], got " + std::to_string(E));
    if (F < 0) throw std::invalid_argument("F must be >= 0, got " + std::to_string(F));
    if (A < 2) throw std::invalid_argument("A must be >= 2, got " + std::to_string(A));
    if (E + F + A > 64) throw std::invalid_argument("E+F+A must be <= 64, got " + std::to_string(E + F + A));
}

double FormatSpec::log_scale() const { return std::ldexp(1.0, F); }
double FormatSpec::log_step() const { return std::ldexp(1.0, -F); }
double FormatSpec::phase_step() const { return kTwoPi * std::ldexp(1.0, -A); }

double FormatSpec::min_modulus() const {
    return std::exp(-std::ldexp(1.0, E) + std::ldexp(1.0, -F));
}

std::string FormatSpec::str() const {
    std::ostringstream os;
    os << E << ',' << F << ',' << A;
    return os.str();
}

Codec::Codec(FormatSpec spec)
    : spec_(spec),
      log_scale_(spec.log_scale()),
      phase_scale_(std::ldexp(1.0, spec.A) / kTwoPi),
      max_log_index_(spec.max_log_index()),
      phase_mask_(spec.phase_count() - 1),
      underflow_((max_log_index_ << spec.A) | phase_mask_) {
    spec_.validate();
}

std::uint64_t Codec::make_word(std::uint64_t log_index, std::uint64_t phase_index) const {
    return (log_index << spec_.A) | (phase_index & phase_mask_);
}

std::uint64_t Codec::encode_impl(std::complex<double> c, RoundingMode mode, RandomStream *rng) const {
    const double m = std::abs(c);
    if (m == 0.0) return underflow_;

    double log_pos = -log_scale_ * std::log(m);
    if (mode.modulus_jitter) log_pos -= rng->symmetric(0.5);
    if (log_pos > static_cast<double>(max_log_index_) + kUnderflowSlack) return underflow_;
    std::uint64_t n = log_pos <= 0.0 ? 0 : static_cast<std::uint64_t>(std::round(log_pos));
    if (n > max_log_index_) n = max_log_index_;

    double theta = std::atan2(c.imag(), c.real());
    if (theta < 0.0) theta += kTwoPi;
    double phase_pos = theta * phase_scale_;
    if (mode.phase_jitter) phase_pos += rng->symmetric(0.5);
    auto a = static_cast<std::uint64_t>(static_cast<std::int64_t>(std::round(phase_pos))) & phase_mask_;

    // A genuine amplitude of modulus mu in the top phase bucket would collide
    // with the underflow code; move it one phase step down.
    if (n == max_log_index_ && a == phase_mask_) a = phase_mask_ - 1;
    return make_word(n, a);
}

std::uint64_t Codec::encode(std::complex<double> c, RoundingMode mode, RandomStream &rng) const {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
        throw InvalidAmplitude("cannot encode non-finite amplitude");
    }
    if (std::abs(c) > 1.0 + kModulusOvershoot) {
        throw AmplitudeOutOfRange("amplitude modulus exceeds 1");
    }
    return encode_impl(c, mode, &rng);
}

std::uint64_t Codec::encode(std::complex<double> c) const {
    RandomStream unused(0);
    return encode(c, RoundingMode::deterministic(), unused);
}

std::uint64_t Codec::encode_saturating(std::complex<double> c, RoundingMode mode,
                                       RandomStream &rng) const {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
        throw InvalidAmplitude("cannot encode non-finite amplitude");
    }
    return encode_impl(c, mode, &rng);
}

std::complex<double> Codec::decode(std::uint64_t word) const {
    if (word == underflow_) return {0.0, 0.0};
    const double log_mod = -std::ldexp(static_cast<double>(word >> spec_.A), -spec_.F);
    const double theta = static_cast<double>(word & phase_mask_) / phase_scale_;
    return std::polar(std::exp(log_mod), theta);
}

std::uint64_t Codec::rotate(std::uint64_t word, std::uint64_t steps) const {
    if (word == underflow_) return word;
    const std::uint64_t n = word >> spec_.A;
    std::uint64_t a = (word + steps) & phase_mask_;
    if (n == max_log_index_ && a == phase_mask_) a = phase_mask_ - 1;
    return make_word(n, a);
}

PackedTriplet Codec::unpack(std::uint64_t word) const {
    const std::uint64_t n = word >> spec_.A;
    const std::uint64_t f_mask = (std::uint64_t{1} << spec_.F) - 1;
    return {n >> spec_.F, n & f_mask, word & phase_mask_};
}

std::uint64_t Codec::pack(PackedTriplet t) const {
    return make_word((t.e << spec_.F) | t.f, t.a);
}

PackedTriplet encode(std::complex<double> c, const FormatSpec &spec, RoundingMode mode,
                     RandomStream &rng) {
    Codec codec(spec);
    return codec.unpack(codec.encode(c, mode, rng));
}

PackedTriplet encode(std::complex<double> c, const FormatSpec &spec) {
    Codec codec(spec);
    return codec.unpack(codec.encode(c));
}

std::complex<double> decode(PackedTriplet t, const FormatSpec &spec) {
    Codec codec(spec);
    return codec.decode(codec.pack(t));
}

double min_modulus(const FormatSpec &spec) { return spec.min_modulus(); }

PackedTriplet underflow_triplet(const FormatSpec &spec) {
    Codec codec(spec);
    return codec.unpack(codec.underflow_word());
}

double wrap_angle(double x) {
    double r = std::remainder(x, kTwoPi);
    return r <= -std::numbers::pi ? r + kTwoPi : r;
}

std::optional<ErrorSample> round_trip_error(std::complex<double> c, const FormatSpec &spec,
                                            RoundingMode mode, RandomStream &rng) {
    Codec codec(spec);
    const std::uint64_t w = codec.encode(c, mode, rng);
    if (codec.is_underflow(w)) return std::nullopt;
    const double decoded_log = -std::ldexp(static_cast<double>(codec.log_index(w)), -spec.F);
    const double decoded_arg = spec.phase_step() * static_cast<double>(codec.phase_index(w));
    return ErrorSample{decoded_log - std::log(std::abs(c)),
                       wrap_angle(decoded_arg - std::arg(c))};
}

}  // namespace loqsim
