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

#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "loqsim/gate.hpp"

namespace loqsim {

namespace {

struct Mnemonic {
    GateKind kind;
    bool adjoint;
};

const std::map<std::string, Mnemonic, std::less<>> &mnemonics() {
    static const std::map<std::string, Mnemonic, std::less<>> table = {
        {"H", {GateKind::H, false}},        {"X", {GateKind::X, false}},
        {"Y", {GateKind::Y, false}},        {"Z", {GateKind::Z, false}},
        {"CNOT", {GateKind::CNOT, false}},  {"CZ", {GateKind::CZ, false}},
        {"CP", {GateKind::CP, false}},      {"CPDG", {GateKind::CP, true}},
        {"SWAP", {GateKind::SWAP, false}},  {"TOFF", {GateKind::TOFFOLI, false}},
        {"U3", {GateKind::U3, false}},      {"ROOTZ", {GateKind::ROOT_Z, false}},
        {"ROOTZDG", {GateKind::ROOT_Z, true}},
    };
    return table;
}

[[noreturn]] void fail(std::size_t line_no, const std::string &what) {
    throw std::invalid_argument("circuit line " + std::to_string(line_no) + ": " + what);
}

template <typename T>
T parse_number(const std::string &tok, std::size_t line_no) {
    T v{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) fail(line_no, "bad number '" + tok + "'");
    return v;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

}  // namespace

Circuit parse_circuit(std::istream &in) {
    Circuit out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;

        auto it = mnemonics().find(tok[0]);
        if (it == mnemonics().end()) fail(line_no, "unknown gate kind '" + tok[0] + "'");
        Gate g{.kind = it->second.kind, .adjoint = it->second.adjoint};

        std::size_t pos = 1;
        auto next = [&]() -> const std::string & {
            if (pos >= tok.size()) fail(line_no, "missing operand for " + tok[0]);
            return tok[pos++];
        };
        for (std::size_t i = 0; i < arity(g.kind); ++i) {
            g.qubits.push_back(parse_number<std::uint32_t>(next(), line_no));
        }
        if (g.kind == GateKind::CP || g.kind == GateKind::ROOT_Z) {
            g.order = parse_number<std::int64_t>(next(), line_no);
        } else if (g.kind == GateKind::U3) {
            g.theta = parse_number<double>(next(), line_no);
            g.lambda = parse_number<double>(next(), line_no);
            g.phi = parse_number<double>(next(), line_no);
        }
        if (pos < tok.size()) {
            if (tok[pos] != "ctrl") fail(line_no, "unexpected token '" + tok[pos] + "'");
            ++pos;
            if (pos == tok.size()) fail(line_no, "ctrl needs at least one qubit");
            for (; pos < tok.size(); ++pos) {
                g.controls.push_back(parse_number<std::uint32_t>(tok[pos], line_no));
            }
        }
        out.push_back(std::move(g));
    }
    return out;
}

Circuit parse_circuit(const std::string &text) {
    std::istringstream in(text);
    return parse_circuit(in);
}

std::string format_gate(const Gate &g) {
    std::string s = mnemonic(g);
    for (auto q : g.qubits) s += ' ' + std::to_string(q);
    if (g.kind == GateKind::CP || g.kind == GateKind::ROOT_Z) {
        s += ' ' + std::to_string(g.order);
    } else if (g.kind == GateKind::U3) {
        s += ' ' + format_double(g.theta) + ' ' + format_double(g.lambda) + ' ' + format_double(g.phi);
    }
    if (!g.controls.empty()) {
        s += " ctrl";
        for (auto q : g.controls) s += ' ' + std::to_string(q);
    }
    return s;
}

void write_circuit(std::ostream &out, const Circuit &c) {
    for (const auto &g : c) out << format_gate(g) << '\n';
}

std::string format_circuit(const Circuit &c) {
    std::ostringstream os;
    write_circuit(os, c);
    return os.str();
}

}  // namespace loqsim
