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

#ifndef LOQSIM_PACKED_WORDS_HPP
#define LOQSIM_PACKED_WORDS_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <span>
#include <vector>

namespace loqsim {

/// Dense array of fixed-width words, each occupying `word_bytes` bytes in
/// little-endian order. Widths 1..8 are supported.
class PackedWords {
  public:
    PackedWords() = default;
    PackedWords(std::size_t count, std::size_t word_bytes, std::uint64_t fill = 0)
        : width_(word_bytes), bytes_(count * word_bytes) {
        for (std::size_t i = 0; i < count; ++i) set(i, fill);
    }

    std::size_t size() const { return width_ == 0 ? 0 : bytes_.size() / width_; }
    std::size_t word_bytes() const { return width_; }

    std::uint64_t get(std::size_t i) const {
        const std::uint8_t *p = bytes_.data() + i * width_;
        if constexpr (std::endian::native == std::endian::little) {
            std::uint64_t v = 0;
            std::memcpy(&v, p, width_);
            return v;
        } else {
            std::uint64_t v = 0;
            for (std::size_t b = 0; b < width_; ++b) v |= std::uint64_t{p[b]} << (8 * b);
            return v;
        }
    }

    void set(std::size_t i, std::uint64_t v) {
        std::uint8_t *p = bytes_.data() + i * width_;
        if constexpr (std::endian::native == std::endian::little) {
            std::memcpy(p, &v, width_);
        } else {
            for (std::size_t b = 0; b < width_; ++b) p[b] = static_cast<std::uint8_t>(v >> (8 * b));
        }
    }

    void swap(std::size_t i, std::size_t j) {
        const std::uint64_t t = get(i);
        set(i, get(j));
        set(j, t);
    }

    std::span<const std::uint8_t> bytes() const { return bytes_; }
    std::span<std::uint8_t> bytes() { return bytes_; }

    bool operator==(const PackedWords &) const = default;

  private:
    std::size_t width_ = 0;
    std::vector<std::uint8_t> bytes_;
};

}  // namespace loqsim

#endif  // LOQSIM_PACKED_WORDS_HPP
