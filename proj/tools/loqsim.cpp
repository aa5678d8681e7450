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

// loqsim command-line driver. Every subcommand prints CSV (default) or JSON.

#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "loqsim/circuits.hpp"
#include "loqsim/harness.hpp"
#include "loqsim/simulator.hpp"
#include "loqsim/state_io.hpp"

namespace {

using namespace loqsim;
using namespace loqsim::harness;

template <typename T>
T parse_number(std::string_view s) {
    T v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    }
    return v;
}

// "16", "16,20,24" or "8-40" (inclusive), or any comma-separated mix.
template <typename T>
std::vector<T> parse_list(const std::string &text) {
    std::vector<T> out;
    std::string_view rest(text);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        if (const auto dash = item.find('-'); dash != std::string_view::npos && dash > 0) {
            const T lo = parse_number<T>(item.substr(0, dash));
            const T hi = parse_number<T>(item.substr(dash + 1));
            if (hi < lo) throw std::invalid_argument("empty range '" + std::string(item) + "'");
            for (T v = lo; v <= hi; ++v) out.push_back(v);
        } else {
            out.push_back(parse_number<T>(item));
        }
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

bool parse_switch(const std::string &s) {
    if (s == "on") return true;
    if (s == "off") return false;
    throw std::invalid_argument("expected on|off, got '" + s + "'");
}

struct RawOptions {
    std::string qubits = "14";
    std::string bits;
    std::vector<std::string> triplets;
    std::uint32_t cycles = 7;
    std::string seeds = "1";
    double sigma = 0.5;
    std::string mod_jitter = "on";
    std::string phase_jitter = "on";
    std::optional<double> norm_threshold;
    std::string regime = "random,biased";
    bool approximate = false;
    std::optional<std::int64_t> order;
    std::optional<int> table_qubits;
    std::string out;
    std::string format = "csv";

    // simulate only
    std::string circuit;
    std::string load;
    std::string dump;
    bool reference = false;
};

void add_common(CLI::App *cmd, RawOptions &o) {
    cmd->add_option("--qubits", o.qubits, "qubit count, or a list for tables");
    cmd->add_option("--bits", o.bits, "bit budgets, e.g. 16,20,24 or 8-40");
    cmd->add_option("--triplet", o.triplets, "explicit E,F,A (repeatable)");
    cmd->add_option("--cycles", o.cycles, "random-circuit cycles");
    cmd->add_option("--seed", o.seeds, "seed list, e.g. 1,2,3 or 1-200");
    cmd->add_option("--sigma", o.sigma, "error tolerance sigma");
    cmd->add_option("--mod-jitter", o.mod_jitter, "stochastic modulus rounding on|off");
    cmd->add_option("--phase-jitter", o.phase_jitter, "stochastic phase rounding on|off");
    cmd->add_option("--norm-threshold", o.norm_threshold, "renormalize when |norm^2 - 1| exceeds this");
    cmd->add_option("--regime", o.regime, "random, biased, or both");
    cmd->add_flag("--approximate", o.approximate, "use the approximate QFT");
    cmd->add_option("--order", o.order, "W for the root-Z stress");
    cmd->add_option("--table-qubits", o.table_qubits, "Q column used to pick optimal triplets");
    cmd->add_option("--out", o.out, "output path (stdout if omitted)");
    cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

ExperimentConfig make_config(const std::string &name, const RawOptions &o) {
    ExperimentConfig c;
    c.experiment = name;
    c.qubits = parse_list<std::uint32_t>(o.qubits);
    if (!o.bits.empty()) c.bits = parse_list<int>(o.bits);
    for (const auto &t : o.triplets) c.triplets.push_back(FormatSpec::parse(t));
    c.cycles = o.cycles;
    c.seeds = parse_list<std::uint64_t>(o.seeds);
    c.sigma = o.sigma;
    c.mode = RoundingMode{parse_switch(o.mod_jitter), parse_switch(o.phase_jitter)};
    c.norm_threshold = o.norm_threshold;
    c.regimes.clear();
    std::string_view rest(o.regime);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        c.regimes.push_back(parse_regime(std::string(rest.substr(0, comma))));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    c.approximate = o.approximate;
    c.order = o.order;
    c.table_qubits = o.table_qubits;
    c.out = o.out;
    c.format = o.format;
    return c;
}

std::uint32_t single_q(const ExperimentConfig &c) {
    if (c.qubits.size() != 1) throw std::invalid_argument("this command takes a single --qubits value");
    return c.qubits.front();
}

// Explicit triplets, else the random-regime optimum for each --bits value.
std::vector<FormatSpec> resolve_specs(const ExperimentConfig &c, std::uint32_t q) {
    std::vector<FormatSpec> specs = c.triplets;
    const int column = c.table_qubits.value_or(static_cast<int>(q));
    for (int b : c.bits) specs.push_back(optimal_triplet(b, column, Regime::random));
    if (specs.empty()) specs.push_back(FormatSpec{});
    return specs;
}

FormatSpec single_spec(const ExperimentConfig &c, std::uint32_t q) {
    auto specs = resolve_specs(c, q);
    if (specs.size() != 1) throw std::invalid_argument("this command takes a single format");
    return specs.front();
}

int run_simulate(const RawOptions &o, const ExperimentConfig &c) {
    if (o.circuit.empty()) throw std::invalid_argument("simulate needs --circuit FILE");
    std::ifstream in(o.circuit);
    if (!in) throw std::runtime_error("cannot open " + o.circuit);
    const Circuit circuit = parse_circuit(in);
    const std::uint64_t seed = c.seeds.front();

    std::optional<PackedState> state;
    if (!o.load.empty()) {
        state.emplace(load_state(o.load, c.mode, seed));
    } else {
        const std::uint32_t q = std::max(single_q(c), min_qubits(circuit));
        check_qubits(q);
        state.emplace(q, single_spec(c, q), c.mode, seed);
    }
    check_qubits(state->qubits());

    std::optional<ReferenceState> reference;
    if (o.reference) {
        if (!o.load.empty()) {
            reference.emplace(state->qubits(), state->decoded());
        } else {
            reference.emplace(state->qubits());
        }
    }
    const RunReport report = run(*state, circuit, reference ? &*reference : nullptr,
                                 RunOptions{c.norm_threshold, true});
    if (!o.dump.empty()) save_state(o.dump, *state);

    Table t;
    t.columns = {"gate", "G", "norm_sq"};
    if (reference) t.columns.push_back("sigma_sq");
    for (std::size_t i = 0; i < report.effective_g.size(); ++i) {
        std::vector<nlohmann::json> row = {i, report.effective_g[i], report.norm_sq[i]};
        if (reference) row.push_back(report.sigma_sq[i]);
        t.rows.push_back(std::move(row));
    }
    t.summary = {{"qubits", state->qubits()},
                 {"triplet", state->spec().str()},
                 {"effective_g", state->effective_g()},
                 {"renormalizations", report.renormalizations}};
    emit(t, c);
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"loqsim: low-precision log-polar state-vector simulator"};
    app.require_subcommand(1);
    RawOptions o;

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"tables", "optimal (E,F,A) triplets per bit budget"},
        {"budget", "one-conversion errors and gate budgets"},
        {"sigma-vs-g", "cumulative error against effective gate count"},
        {"roundtrip", "random circuit followed by its inverse"},
        {"qft-test", "QFT or AQFT of a plane wave"},
        {"porter-thomas", "output distribution of random circuits"},
        {"histograms", "rounding and cumulative error histograms"},
        {"rootz", "repeated small phase rotations"},
        {"simulate", "run a circuit file"},
    };
    std::map<std::string, CLI::App *> subs;
    for (const auto &[name, help] : commands) {
        subs[name] = app.add_subcommand(name, help);
        add_common(subs[name], o);
    }
    subs["simulate"]->add_option("--circuit", o.circuit, "circuit text file");
    subs["simulate"]->add_option("--load", o.load, "initial packed state file");
    subs["simulate"]->add_option("--dump", o.dump, "write the final packed state here");
    subs["simulate"]->add_flag("--reference", o.reference, "also track a double-precision state");

    CLI11_PARSE(app, argc, argv);

    try {
        std::string name;
        for (const auto &[n, sub] : subs) {
            if (sub->parsed()) name = n;
        }
        ExperimentConfig c = make_config(name, o);

        if (name == "tables") {
            std::vector<int> qs(c.qubits.begin(), c.qubits.end());
            if (!subs[name]->count("--qubits")) qs = {20, 30, 40, 50};
            std::vector<int> bits = c.bits.empty() ? parse_list<int>("8-40") : c.bits;
            emit(to_table(cmd_tables(bits, qs, c.regimes)), c);
        } else if (name == "budget") {
            const int q = subs[name]->count("--qubits") ? static_cast<int>(single_q(c)) : 50;
            std::vector<int> bits = c.bits.empty() ? parse_list<int>("8,12,16,20,24,28,32,36,40") : c.bits;
            emit(to_table(cmd_budget(q, c.sigma, bits)), c);
        } else if (name == "sigma-vs-g") {
            const auto q = single_q(c);
            emit(to_table(cmd_sigma_vs_g(q, c.cycles, resolve_specs(c, q), c.seeds, c.mode, c.norm_threshold)), c);
        } else if (name == "roundtrip") {
            const auto q = single_q(c);
            std::vector<int> bits = c.bits.empty() ? std::vector<int>{16, 20, 24} : c.bits;
            emit(to_table(cmd_roundtrip(q, c.cycles, bits, c.seeds, c.mode, c.table_qubits)), c);
        } else if (name == "qft-test") {
            const auto q = single_q(c);
            emit(to_table(cmd_qft_test(q, resolve_specs(c, q), c.seeds, c.mode, c.approximate)), c);
        } else if (name == "porter-thomas") {
            const auto q = single_q(c);
            emit(to_table(cmd_porter_thomas(q, c.cycles, single_spec(c, q), c.seeds.front(), c.mode)), c);
        } else if (name == "histograms") {
            const auto q = single_q(c);
            emit(to_table(cmd_histograms(q, single_spec(c, q), c.seeds, c.cycles, c.mode)), c);
        } else if (name == "rootz") {
            const auto q = single_q(c);
            emit(to_table(cmd_rootz_stress(q, single_spec(c, q), c.mode.phase_jitter, c.seeds, c.order),
                          c.seeds),
                 c);
        } else if (name == "simulate") {
            return run_simulate(o, c);
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
