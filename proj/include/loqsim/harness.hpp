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

#ifndef LOQSIM_HARNESS_HPP
#define LOQSIM_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "loqsim/error_model.hpp"
#include "loqsim/format.hpp"
#include "loqsim/stats.hpp"

namespace loqsim::harness {

/// Default cap on simulated qubits; the reference state alone needs 16 * 2^q
/// bytes. Overridden by the LOQSIM_MAX_QUBITS environment variable.
inline constexpr std::uint32_t kDefaultMaxQubits = 24;

std::uint32_t max_qubits();

/// Throws std::invalid_argument if q exceeds max_qubits().
void check_qubits(std::uint32_t q);

struct ExperimentConfig {
    std::string experiment;
    std::vector<std::uint32_t> qubits = {14};
    std::vector<int> bits;
    std::vector<FormatSpec> triplets;
    std::uint32_t cycles = 7;
    std::vector<std::uint64_t> seeds = {1};
    double sigma = 0.5;
    RoundingMode mode = RoundingMode::stochastic();
    std::optional<double> norm_threshold;
    std::vector<Regime> regimes = {Regime::random, Regime::biased};
    bool approximate = false;
    std::optional<std::int64_t> order;  // W for the root-Z stress
    std::optional<int> table_qubits;    // Q column used to pick optimal triplets
    std::string out;
    std::string format = "csv";
};

nlohmann::json to_json(const ExperimentConfig &config);

/// Column-oriented result of one command, printable as CSV or JSON.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<nlohmann::json>> rows;
    nlohmann::json summary = nlohmann::json::object();
};

void write_csv(std::ostream &out, const Table &table);
void write_json(std::ostream &out, const Table &table, const ExperimentConfig &config);
/// Writes to config.out (stdout when empty) in config.format.
void emit(const Table &table, const ExperimentConfig &config);

// ---------------------------------------------------------------------------
// Formula-only commands.

struct TripletRow {
    int bits;
    int qubits;
    Regime regime;
    FormatSpec spec;
    double eps;
};

std::vector<TripletRow> cmd_tables(const std::vector<int> &bits, const std::vector<int> &qubits,
                                   const std::vector<Regime> &regimes);
Table to_table(const std::vector<TripletRow> &rows);

struct BudgetRow {
    int bits;
    FormatSpec spec;
    double eps_c_sq;
    std::uint64_t g_random;
    double eps_b_sq;
    std::uint64_t g_biased;
};

/// Uses the random-regime optimal triplet for each B.
std::vector<BudgetRow> cmd_budget(int qubits, double sigma, const std::vector<int> &bits);
Table to_table(const std::vector<BudgetRow> &rows);

// ---------------------------------------------------------------------------
// Simulation commands.

struct SigmaRow {
    std::uint64_t seed;
    FormatSpec spec;
    double g;
    double measured;
    double model;
};

/// Gaussian random initial state, `cycles` random cycles, sigma^2 against the
/// double-precision run after every error-prone gate (and at G = 0).
std::vector<SigmaRow> cmd_sigma_vs_g(std::uint32_t qubits, std::uint32_t cycles,
                                     const std::vector<FormatSpec> &specs,
                                     const std::vector<std::uint64_t> &seeds,
                                     RoundingMode mode = RoundingMode::deterministic(),
                                     std::optional<double> norm_threshold = std::nullopt);
Table to_table(const std::vector<SigmaRow> &rows);

struct RoundtripRow {
    std::uint64_t seed;
    int bits;
    FormatSpec spec;
    std::uint64_t x0;
    double g;
    double model;
    double actual;
    double reference_error;
};

/// |x0>, cycles forward, normalize, inverse, normalize; compares the
/// measured error to eps_c^2 * G. Each B uses its random-regime optimal
/// triplet for `table_qubits` (default: the simulated qubit count).
///
/// Below about 14 qubits the optimal triplets switch to E = 3, whose large
/// underflow threshold flushes the residual error amplitudes of the inverse
/// pass to zero; pass table_qubits = 20 to use the smallest column of the reference tables.
std::vector<RoundtripRow> cmd_roundtrip(std::uint32_t qubits, std::uint32_t cycles,
                                        const std::vector<int> &bits,
                                        const std::vector<std::uint64_t> &seeds, RoundingMode mode,
                                        std::optional<int> table_qubits = std::nullopt);
Table to_table(const std::vector<RoundtripRow> &rows);

struct QftRow {
    std::uint64_t seed;
    FormatSpec spec;
    std::uint64_t x0;
    bool approximate;
    double g;
    double hadamards;
    double model;
    double actual;
    double reference_error;
};

/// Plane wave for a seeded x0, normalize, (A)QFT, normalize, error vs |x0>.
std::vector<QftRow> cmd_qft_test(std::uint32_t qubits, const std::vector<FormatSpec> &specs,
                                 const std::vector<std::uint64_t> &seeds, RoundingMode mode,
                                 bool approximate);
Table to_table(const std::vector<QftRow> &rows);

struct PorterThomasResult {
    std::vector<double> x;  // N p grid
    std::vector<double> survival_reference;
    std::vector<double> survival_packed;
    std::vector<double> survival_model;  // exp(-x)
    stats::KsResult ks_reference;
    stats::KsResult ks_packed;
    double autocorrelation = 0.0;  // lag-1, real parts of the reference state
};

/// |0>, `cycles` random cycles, distribution of N |c_k|^2.
PorterThomasResult cmd_porter_thomas(std::uint32_t qubits, std::uint32_t cycles, const FormatSpec &spec,
                                     std::uint64_t seed,
                                     RoundingMode mode = RoundingMode::deterministic());
Table to_table(const PorterThomasResult &r);

struct HistogramResult {
    std::size_t bins = 64;
    double eps_half_width = 0.0;
    double gamma_half_width = 0.0;
    std::vector<std::uint64_t> eps_counts;
    std::vector<std::uint64_t> gamma_counts;
    std::vector<std::uint64_t> cumulative_counts;  // normalized errors on [-4, 4]
    stats::ChiSquareResult eps_chi;
    stats::ChiSquareResult gamma_chi;
    stats::KsResult cumulative_ks;
    double cumulative_g = 0.0;
};

/// Rounding errors of one conversion of Gaussian states, and the real-part
/// errors after `cycles` random cycles normalized by the predicted std.
HistogramResult cmd_histograms(std::uint32_t qubits, const FormatSpec &spec,
                               const std::vector<std::uint64_t> &seeds, std::uint32_t cycles,
                               RoundingMode mode = RoundingMode::deterministic());
Table to_table(const HistogramResult &r);

struct RootzResult {
    std::int64_t order = 0;
    std::uint64_t count = 0;
    double expected = 0.0;
    std::vector<double> net_phase;  // per seed, unwrapped
    double mean = 0.0;
    double standard_error = 0.0;
};

/// Applies ROOTZ(W) `count` times (default W = 2^(A+2), count = W) to |1>
/// and tracks the accumulated phase of that amplitude.
RootzResult cmd_rootz_stress(std::uint32_t qubits, const FormatSpec &spec, bool jitter,
                             const std::vector<std::uint64_t> &seeds,
                             std::optional<std::int64_t> order = std::nullopt);
Table to_table(const RootzResult &r, const std::vector<std::uint64_t> &seeds);

/// Seeded basis index in [0, 2^q).
std::uint64_t seeded_index(std::uint32_t qubits, std::uint64_t seed);

}  // namespace loqsim::harness

#endif  // LOQSIM_HARNESS_HPP
