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

#include "loqsim/state_io.hpp"

#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace loqsim {

namespace {
constexpr std::array<char, 4> kMagic = {'L', 'Q', 'S', '1'};
}

void write_state(std::ostream &out, const PackedState &state) {
    const FormatSpec &s = state.spec();
    out.write(kMagic.data(), kMagic.size());
    const std::array<char, 4> header = {static_cast<char>(state.qubits()), static_cast<char>(s.E),
                                        static_cast<char>(s.F), static_cast<char>(s.A)};
    out.write(header.data(), header.size());
    const auto bytes = state.words().bytes();
    out.write(reinterpret_cast<const char *>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("failed writing packed state");
}

PackedState read_state(std::istream &in, RoundingMode mode, std::uint64_t seed) {
    std::array<char, 4> magic{};
    std::array<unsigned char, 4> header{};
    in.read(magic.data(), magic.size());
    if (!in || magic != kMagic) throw std::runtime_error("not a packed-state file (bad magic)");
    in.read(reinterpret_cast<char *>(header.data()), header.size());
    if (!in) throw std::runtime_error("truncated packed-state header");

    const std::uint32_t q = header[0];
    if (q > 40) throw std::runtime_error("packed-state file has implausible qubit count");
    const FormatSpec spec = FormatSpec::make(header[1], header[2], header[3]);
    PackedWords words(std::uint64_t{1} << q, spec.word_bytes());
    auto bytes = words.bytes();
    in.read(reinterpret_cast<char *>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (in.gcount() != static_cast<std::streamsize>(bytes.size())) {
        throw std::runtime_error("truncated packed-state payload");
    }
    if (in.peek() != std::char_traits<char>::eof()) {
        throw std::runtime_error("trailing bytes after packed-state payload");
    }
    if (spec.bits() < 64) {
        for (std::size_t k = 0; k < words.size(); ++k) {
            if (words.get(k) >> spec.bits()) throw std::runtime_error("packed word exceeds B bits");
        }
    }
    return PackedState(q, spec, std::move(words), mode, seed);
}

void save_state(const std::string &path, const PackedState &state) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_state(out, state);
}

PackedState load_state(const std::string &path, RoundingMode mode, std::uint64_t seed) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_state(in, mode, seed);
}

}  // namespace loqsim
