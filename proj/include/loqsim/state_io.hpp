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

#ifndef LOQSIM_STATE_IO_HPP
#define LOQSIM_STATE_IO_HPP

#include <iosfwd>
#include <string>

#include "loqsim/packed_state.hpp"

namespace loqsim {

/// Packed-state file: "LQS1", then Q, E, F, A as one byte each, then 2^Q
/// words of ceil(B/8) bytes, little-endian.
void write_state(std::ostream &out, const PackedState &state);
PackedState read_state(std::istream &in, RoundingMode mode = {}, std::uint64_t seed = 0);

void save_state(const std::string &path, const PackedState &state);
PackedState load_state(const std::string &path, RoundingMode mode = {}, std::uint64_t seed = 0);

}  // namespace loqsim

#endif  // LOQSIM_STATE_IO_HPP
