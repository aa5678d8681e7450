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

#ifndef LOQSIM_RANDOM_HPP
#define LOQSIM_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace loqsim {

/// SplitMix64 output function (Steele, Lea, Flood 2014).
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Hashes a master seed together with up to two stream coordinates.
constexpr std::uint64_t derive_key(std::uint64_t seed, std::uint64_t a = 0, std::uint64_t b = 0) {
    constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
    std::uint64_t k = mix64(seed + kGamma);
    k = mix64(k ^ (a + 2 * kGamma));
    k = mix64(k ^ (b + 3 * kGamma));
    return k;
}

/// Counter-based random stream: output i is mix64(key + (i + 1) * gamma).
///
/// Streams are addressed by (seed, a, b) so any amplitude index or gate
/// counter gets its own independent sequence regardless of evaluation order.
/// Satisfies UniformRandomBitGenerator. Distributions are implemented here
/// (not via <random>) so that sequences are identical across standard
/// libraries.
class RandomStream {
  public:
    using result_type = std::uint64_t;

    constexpr explicit RandomStream(std::uint64_t seed, std::uint64_t a = 0, std::uint64_t b = 0)
        : key_(derive_key(seed, a, b)) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    constexpr result_type operator()() {
        counter_ += 0x9E3779B97F4A7C15ULL;
        return mix64(key_ + counter_);
    }

    /// Uniform on the open interval (0, 1).
    double uniform() { return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53; }

    /// Uniform on (-half_width, half_width).
    double symmetric(double half_width) { return half_width * (2.0 * uniform() - 1.0); }

    /// Standard normal via Box-Muller; the second variate is cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double r = std::sqrt(-2.0 * std::log(uniform()));
        double t = 2.0 * std::numbers::pi * uniform();
        spare_ = r * std::sin(t);
        has_spare_ = true;
        return r * std::cos(t);
    }

    bool coin() { return ((*this)() >> 63) != 0; }

  private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace loqsim

#endif  // LOQSIM_RANDOM_HPP
