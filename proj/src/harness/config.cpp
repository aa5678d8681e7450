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

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "loqsim/harness.hpp"

namespace loqsim::harness {

std::uint32_t max_qubits() {
    if (const char *env = std::getenv("LOQSIM_MAX_QUBITS"); env && *env) {
        const long v = std::strtol(env, nullptr, 10);
        if (v < 1 || v > 40) throw std::invalid_argument("LOQSIM_MAX_QUBITS must be in [1, 40]");
        return static_cast<std::uint32_t>(v);
    }
    return kDefaultMaxQubits;
}

void check_qubits(std::uint32_t q) {
    const auto cap = max_qubits();
    if (q > cap) {
        throw std::invalid_argument("q = " + std::to_string(q) + " exceeds the memory cap of " +
                                    std::to_string(cap) + " qubits (set LOQSIM_MAX_QUBITS)");
    }
}

nlohmann::json to_json(const ExperimentConfig &c) {
    nlohmann::json j;
    j["experiment"] = c.experiment;
    j["qubits"] = c.qubits;
    j["bits"] = c.bits;
    auto triplets = nlohmann::json::array();
    for (const auto &s : c.triplets) triplets.push_back({s.E, s.F, s.A});
    j["triplets"] = triplets;
    j["cycles"] = c.cycles;
    j["seeds"] = c.seeds;
    j["sigma"] = c.sigma;
    j["mod_jitter"] = c.mode.modulus_jitter;
    j["phase_jitter"] = c.mode.phase_jitter;
    j["norm_threshold"] = c.norm_threshold ? nlohmann::json(*c.norm_threshold) : nlohmann::json();
    auto regimes = nlohmann::json::array();
    for (auto r : c.regimes) regimes.push_back(to_string(r));
    j["regimes"] = regimes;
    j["approximate"] = c.approximate;
    j["order"] = c.order ? nlohmann::json(*c.order) : nlohmann::json();
    j["table_qubits"] = c.table_qubits ? nlohmann::json(*c.table_qubits) : nlohmann::json();
    j["format"] = c.format;
    return j;
}

}  // namespace loqsim::harness
