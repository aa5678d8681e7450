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

#include <sstream>

#include <gtest/gtest.h>

#include "loqsim/circuits.hpp"
#include "loqsim/state_io.hpp"

using namespace loqsim;

namespace {

PackedState sample_state(const FormatSpec &spec) {
    return init_state(5, spec, RoundingMode::deterministic(), random_sphere_state(5, 17));
}

std::string serialize(const PackedState &s) {
    std::ostringstream out;
    write_state(out, s);
    return out.str();
}

PackedState parse(const std::string &bytes) {
    std::istringstream in(bytes);
    return read_state(in);
}

}  // namespace

TEST(state_io, round_trip) {
    for (const FormatSpec &spec : {FormatSpec{4, 5, 7}, FormatSpec{4, 9, 11}, FormatSpec{8, 24, 32}}) {
        const PackedState s = sample_state(spec);
        const std::string bytes = serialize(s);
        EXPECT_EQ(bytes.size(), 8 + s.size() * spec.word_bytes());
        EXPECT_TRUE(parse(bytes) == s) << spec.str();
    }
}

TEST(state_io, header_layout) {
    const std::string bytes = serialize(PackedState(3, FormatSpec{4, 5, 7}));
    EXPECT_EQ(bytes.substr(0, 4), "LQS1");
    EXPECT_EQ(bytes[4], 3);
    EXPECT_EQ(bytes[5], 4);
    EXPECT_EQ(bytes[6], 5);
    EXPECT_EQ(bytes[7], 7);
    // |000>: word 0 is zero, the rest are the all-ones underflow code
    EXPECT_EQ(static_cast<unsigned char>(bytes[8]), 0x00);
    EXPECT_EQ(static_cast<unsigned char>(bytes[9]), 0x00);
    EXPECT_EQ(static_cast<unsigned char>(bytes[10]), 0xff);
    EXPECT_EQ(static_cast<unsigned char>(bytes[11]), 0xff);
}

TEST(state_io, file_round_trip) {
    const PackedState s = sample_state(FormatSpec{4, 5, 7});
    const std::string path = ::testing::TempDir() + "loqsim_state_io.lqs";
    save_state(path, s);
    EXPECT_TRUE(load_state(path) == s);
    EXPECT_THROW(load_state(path + ".missing"), std::runtime_error);
}

TEST(state_io, rejects_malformed_input) {
    const std::string good = serialize(sample_state(FormatSpec{4, 5, 7}));
    std::string bad_magic = good;
    bad_magic[0] = 'X';
    EXPECT_THROW(parse(bad_magic), std::runtime_error);
    EXPECT_THROW(parse(good.substr(0, 6)), std::runtime_error);
    EXPECT_THROW(parse(good.substr(0, good.size() - 1)), std::runtime_error);
    EXPECT_THROW(parse(good + '\0'), std::runtime_error);
    std::string wide = good;
    wide[9] = static_cast<char>(0x80);  // bit 15 of word 0, one past B = 15
    EXPECT_THROW(parse(wide.replace(5, 3, std::string{4, 5, 6})), std::runtime_error);
    std::string bad_spec = good;
    bad_spec[5] = 0;
    EXPECT_THROW(parse(bad_spec), std::exception);
}
