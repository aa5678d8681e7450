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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "loqsim/circuits.hpp"
#include "loqsim/harness.hpp"
#include "loqsim/numeric.hpp"
#include "loqsim/simulator.hpp"

namespace loqsim::harness {

namespace {

nlohmann::json triplet_json(const FormatSpec &s) { return s.str(); }

nlohmann::json ks_json(const stats::KsResult &ks) {
    return {{"statistic", ks.statistic}, {"n", ks.n}, {"p_value", ks.p_value},
            {"critical_0.001", ks.critical(0.001)}};
}

nlohmann::json chi_json(const stats::ChiSquareResult &c) {
    return {{"statistic", c.statistic}, {"dof", c.dof}, {"p_value", c.p_value}};
}

}  // namespace

std::uint64_t seeded_index(std::uint32_t qubits, std::uint64_t seed) {
    RandomStream rng(seed, 0x7830ULL);
    return rng() & ((std::uint64_t{1} << qubits) - 1);
}

std::vector<SigmaRow> cmd_sigma_vs_g(std::uint32_t qubits, std::uint32_t cycles,
                                     const std::vector<FormatSpec> &specs,
                                     const std::vector<std::uint64_t> &seeds, RoundingMode mode,
                                     std::optional<double> norm_threshold) {
    check_qubits(qubits);
    std::vector<SigmaRow> rows;
    for (auto seed : seeds) {
        const Amplitudes initial = random_sphere_state(qubits, seed);
        const Circuit circuit = random_cycles(qubits, cycles, seed);
        for (const auto &spec : specs) {
            ReferenceState reference(qubits, initial);
            PackedState state = init_state(qubits, spec, mode, initial, seed);
            const RunReport report =
                run(state, circuit, &reference, RunOptions{norm_threshold, false});
            const double eps = conversion_error_random(static_cast<int>(qubits), spec);
            // Keep the last trace entry for each distinct G.
            for (std::size_t i = 0; i < report.effective_g.size(); ++i) {
                const bool last_of_g = i + 1 == report.effective_g.size() ||
                                       report.effective_g[i + 1] != report.effective_g[i];
                if (!last_of_g) continue;
                const double g = report.effective_g[i];
                rows.push_back({seed, spec, g, report.sigma_sq[i], eps * g});
            }
        }
    }
    return rows;
}

Table to_table(const std::vector<SigmaRow> &rows) {
    Table t;
    t.columns = {"seed", "triplet", "G", "sigma_sq_measured", "sigma_sq_model"};
    for (const auto &r : rows) t.rows.push_back({r.seed, triplet_json(r.spec), r.g, r.measured, r.model});
    return t;
}

std::vector<RoundtripRow> cmd_roundtrip(std::uint32_t qubits, std::uint32_t cycles,
                                        const std::vector<int> &bits,
                                        const std::vector<std::uint64_t> &seeds, RoundingMode mode,
                                        std::optional<int> table_qubits) {
    check_qubits(qubits);
    std::vector<RoundtripRow> rows;
    for (auto seed : seeds) {
        const std::uint64_t x0 = seeded_index(qubits, seed);
        const Circuit forward = random_cycles(qubits, cycles, seed);
        const Circuit backward = inverse(forward);
        const Amplitudes initial = basis_state(qubits, x0);

        ReferenceState reference(qubits, initial);
        apply_circuit(reference, forward);
        apply_circuit(reference, backward);
        CompensatedSum ref_err;
        for (Eigen::Index k = 0; k < reference.size(); ++k) {
            ref_err += static_cast<std::uint64_t>(k) == x0 ? std::norm(reference[k] - 1.0)
                                                           : std::norm(reference[k]);
        }

        for (int b : bits) {
            const FormatSpec spec =
                optimal_triplet(b, table_qubits.value_or(static_cast<int>(qubits)), Regime::random);
            PackedState state = init_state(qubits, spec, mode, initial, seed);
            run(state, forward, nullptr, RunOptions{std::nullopt, false});
            renormalize(state);
            run(state, backward, nullptr, RunOptions{std::nullopt, false});
            renormalize(state);
            const double g = state.effective_g();
            const double eps = conversion_error_random(static_cast<int>(qubits), spec);
            rows.push_back({seed, b, spec, x0, g, eps * g, true_error(state, x0), ref_err.value()});
        }
    }
    return rows;
}

Table to_table(const std::vector<RoundtripRow> &rows) {
    Table t;
    t.columns = {"seed", "B", "triplet", "x0", "G", "sigma_sq_model", "sigma_sq_actual",
                 "reference_error"};
    for (const auto &r : rows) {
        t.rows.push_back({r.seed, r.bits, triplet_json(r.spec), r.x0, r.g, r.model, r.actual,
                          r.reference_error});
    }
    return t;
}

std::vector<QftRow> cmd_qft_test(std::uint32_t qubits, const std::vector<FormatSpec> &specs,
                                 const std::vector<std::uint64_t> &seeds, RoundingMode mode,
                                 bool approximate) {
    check_qubits(qubits);
    const Circuit circuit = approximate ? aqft(qubits) : qft(qubits);
    const double hadamards = static_cast<double>(
        std::count_if(circuit.begin(), circuit.end(), [](const Gate &g) { return g.kind == GateKind::H; }));
    std::vector<QftRow> rows;
    for (auto seed : seeds) {
        const std::uint64_t x0 = seeded_index(qubits, seed);
        const Amplitudes initial = plane_wave_state(qubits, x0);

        ReferenceState reference(qubits, initial);
        apply_circuit(reference, circuit);
        CompensatedSum ref_err;
        for (Eigen::Index k = 0; k < reference.size(); ++k) {
            ref_err += static_cast<std::uint64_t>(k) == x0 ? std::norm(reference[k] - 1.0)
                                                           : std::norm(reference[k]);
        }

        for (const auto &spec : specs) {
            PackedState state = init_state(qubits, spec, mode, initial, seed);
            renormalize(state);
            run(state, circuit, nullptr, RunOptions{std::nullopt, false});
            renormalize(state);
            const double g = state.effective_g();
            const double eps = conversion_error_random(static_cast<int>(qubits), spec);
            rows.push_back({seed, spec, x0, approximate, g, hadamards, eps * g, true_error(state, x0),
                            ref_err.value()});
        }
    }
    return rows;
}

Table to_table(const std::vector<QftRow> &rows) {
    Table t;
    t.columns = {"seed", "triplet", "x0", "approximate", "G", "hadamards", "sigma_sq_model",
                 "sigma_sq_actual", "reference_error"};
    for (const auto &r : rows) {
        t.rows.push_back({r.seed, triplet_json(r.spec), r.x0, r.approximate, r.g, r.hadamards, r.model,
                          r.actual, r.reference_error});
    }
    return t;
}

PorterThomasResult cmd_porter_thomas(std::uint32_t qubits, std::uint32_t cycles, const FormatSpec &spec,
                                     std::uint64_t seed, RoundingMode mode) {
    check_qubits(qubits);
    const Circuit circuit = random_cycles(qubits, cycles, seed);
    ReferenceState reference(qubits);
    apply_circuit(reference, circuit);
    PackedState state(qubits, spec, mode, seed);
    run(state, circuit, nullptr, RunOptions{std::nullopt, false});

    const auto n = static_cast<std::size_t>(state.size());
    const double big_n = static_cast<double>(n);
    std::vector<double> ref_np(n), packed_np(n), ref_re(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto c = reference[static_cast<Eigen::Index>(k)];
        ref_np[k] = big_n * std::norm(c);
        ref_re[k] = c.real();
        packed_np[k] = big_n * std::norm(state.amplitude(k));
    }

    PorterThomasResult r;
    const auto exp_cdf = [](double x) { return x <= 0 ? 0.0 : -std::expm1(-x); };
    r.ks_reference = stats::ks_test(ref_np, exp_cdf);
    r.ks_packed = stats::ks_test(packed_np, exp_cdf);
    r.autocorrelation = stats::lag1_autocorrelation(ref_re);

    std::sort(ref_np.begin(), ref_np.end());
    std::sort(packed_np.begin(), packed_np.end());
    auto survival = [&](const std::vector<double> &sorted, double x) {
        const auto above = sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), x);
        return static_cast<double>(above) / big_n;
    };
    constexpr int kPoints = 101;
    for (int i = 0; i < kPoints; ++i) {
        const double x = 10.0 * i / (kPoints - 1);
        r.x.push_back(x);
        r.survival_reference.push_back(survival(ref_np, x));
        r.survival_packed.push_back(survival(packed_np, x));
        r.survival_model.push_back(std::exp(-x));
    }
    return r;
}

Table to_table(const PorterThomasResult &r) {
    Table t;
    t.columns = {"Np", "survival_reference", "survival_packed", "survival_model"};
    for (std::size_t i = 0; i < r.x.size(); ++i) {
        t.rows.push_back({r.x[i], r.survival_reference[i], r.survival_packed[i], r.survival_model[i]});
    }
    t.summary = {{"ks_reference", ks_json(r.ks_reference)},
                 {"ks_packed", ks_json(r.ks_packed)},
                 {"lag1_autocorrelation", r.autocorrelation}};
    return t;
}

HistogramResult cmd_histograms(std::uint32_t qubits, const FormatSpec &spec,
                               const std::vector<std::uint64_t> &seeds, std::uint32_t cycles,
                               RoundingMode mode) {
    check_qubits(qubits);
    HistogramResult r;
    r.eps_half_width = spec.log_step() / 2;
    r.gamma_half_width = spec.phase_step() / 2;

    std::vector<double> eps, gamma, normalized;
    for (auto seed : seeds) {
        const Amplitudes initial = random_sphere_state(qubits, seed);
        RandomStream unused(seed);
        for (Eigen::Index k = 0; k < initial.size(); ++k) {
            if (auto e = round_trip_error(initial(k), spec, RoundingMode::deterministic(), unused)) {
                eps.push_back(e->eps);
                gamma.push_back(e->gamma);
            }
        }

        ReferenceState reference(qubits, initial);
        PackedState state = init_state(qubits, spec, mode, initial, seed);
        const Circuit circuit = cycles > 0 ? random_cycles(qubits, cycles, seed) : Circuit{};
        run(state, circuit, &reference, RunOptions{std::nullopt, false});
        r.cumulative_g = state.effective_g();
        // Model variance per real component; the initial conversion counts as one gate.
        const double sigma_sq = conversion_error_random(static_cast<int>(qubits), spec) *
                                (state.effective_g() + 1.0);
        const double scale = std::sqrt(2.0 * static_cast<double>(state.size()) / sigma_sq);
        for (Eigen::Index k = 0; k < initial.size(); ++k) {
            normalized.push_back((reference[k] - state.amplitude(static_cast<std::uint64_t>(k))).real() *
                                 scale);
        }
    }
    r.eps_counts = stats::histogram(eps, -r.eps_half_width, r.eps_half_width, r.bins);
    r.gamma_counts = stats::histogram(gamma, -r.gamma_half_width, r.gamma_half_width, r.bins);
    r.cumulative_counts = stats::histogram(normalized, -4.0, 4.0, r.bins);
    r.eps_chi = stats::chi_square_uniform(r.eps_counts);
    r.gamma_chi = stats::chi_square_uniform(r.gamma_counts);
    r.cumulative_ks = stats::ks_test(normalized, stats::normal_cdf);
    return r;
}

Table to_table(const HistogramResult &r) {
    Table t;
    t.columns = {"series", "bin_lo", "bin_hi", "count", "expected"};
    auto add = [&](const char *name, const std::vector<std::uint64_t> &counts, double lo, double hi,
                   bool normal) {
        std::uint64_t total = 0;
        for (auto c : counts) total += c;
        const double width = (hi - lo) / static_cast<double>(counts.size());
        for (std::size_t i = 0; i < counts.size(); ++i) {
            const double a = lo + width * static_cast<double>(i), b = a + width;
            const double p = normal ? stats::normal_cdf(b) - stats::normal_cdf(a)
                                    : 1.0 / static_cast<double>(counts.size());
            t.rows.push_back({name, a, b, counts[i], p * static_cast<double>(total)});
        }
    };
    add("eps", r.eps_counts, -r.eps_half_width, r.eps_half_width, false);
    add("gamma", r.gamma_counts, -r.gamma_half_width, r.gamma_half_width, false);
    add("cumulative_re", r.cumulative_counts, -4.0, 4.0, true);
    t.summary = {{"eps_chi_square", chi_json(r.eps_chi)},
                 {"gamma_chi_square", chi_json(r.gamma_chi)},
                 {"cumulative_ks", ks_json(r.cumulative_ks)},
                 {"effective_g", r.cumulative_g}};
    return t;
}

RootzResult cmd_rootz_stress(std::uint32_t qubits, const FormatSpec &spec, bool jitter,
                             const std::vector<std::uint64_t> &seeds, std::optional<std::int64_t> order) {
    check_qubits(qubits);
    if (qubits < 1) throw std::invalid_argument("need at least one qubit");
    if (seeds.empty()) throw std::invalid_argument("need at least one seed");
    RootzResult r;
    r.order = order.value_or(std::int64_t{1} << (spec.A + 2));
    r.count = static_cast<std::uint64_t>(r.order);
    r.expected = std::numbers::pi * static_cast<double>(r.count) / static_cast<double>(r.order);

    const Gate gate = gates::root_z(0, r.order);
    const auto half = static_cast<std::int64_t>(spec.phase_count() / 2);
    const auto full = static_cast<std::int64_t>(spec.phase_count());
    for (auto seed : seeds) {
        PackedState state = init_state(qubits, spec, RoundingMode{false, jitter}, basis_state(qubits, 1), seed);
        std::int64_t steps = 0;
        auto prev = static_cast<std::int64_t>(state.codec().phase_index(state.word(1)));
        for (std::uint64_t i = 0; i < r.count; ++i) {
            apply_gate(state, gate);
            const auto cur = static_cast<std::int64_t>(state.codec().phase_index(state.word(1)));
            std::int64_t d = (cur - prev) % full;
            if (d > half) d -= full;
            if (d <= -half) d += full;
            steps += d;
            prev = cur;
        }
        r.net_phase.push_back(spec.phase_step() * static_cast<double>(steps));
    }
    r.mean = stats::mean(r.net_phase);
    r.standard_error =
        r.net_phase.size() > 1 ? std::sqrt(stats::variance(r.net_phase) / static_cast<double>(r.net_phase.size()))
                               : 0.0;
    return r;
}

Table to_table(const RootzResult &r, const std::vector<std::uint64_t> &seeds) {
    Table t;
    t.columns = {"seed", "W", "count", "net_phase", "expected"};
    for (std::size_t i = 0; i < r.net_phase.size(); ++i) {
        t.rows.push_back({seeds.at(i), r.order, r.count, r.net_phase[i], r.expected});
    }
    t.summary = {{"mean_phase", r.mean}, {"standard_error", r.standard_error}, {"expected", r.expected}};
    return t;
}

}  // namespace loqsim::harness
