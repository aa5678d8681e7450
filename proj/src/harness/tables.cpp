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

#include "loqsim/harness.hpp"

namespace loqsim::harness {

std::vector<TripletRow> cmd_tables(const std::vector<int> &bits, const std::vector<int> &qubits,
                                   const std::vector<Regime> &regimes) {
    std::vector<TripletRow> rows;
    for (auto regime : regimes) {
        for (int b : bits) {
            for (int q : qubits) {
                const FormatSpec spec = optimal_triplet(b, q, regime);
                rows.push_back({b, q, regime, spec, regime_error(q, spec, regime)});
            }
        }
    }
    return rows;
}

Table to_table(const std::vector<TripletRow> &rows) {
    Table t;
    t.columns = {"B", "Q", "regime", "E", "F", "A", "eps"};
    for (const auto &r : rows) {
        t.rows.push_back({r.bits, r.qubits, to_string(r.regime), r.spec.E, r.spec.F, r.spec.A, r.eps});
    }
    return t;
}

std::vector<BudgetRow> cmd_budget(int qubits, double sigma, const std::vector<int> &bits) {
    std::vector<BudgetRow> rows;
    for (int b : bits) {
        const FormatSpec spec = optimal_triplet(b, qubits, Regime::random);
        const ErrorBudget budget = error_budget(qubits, spec, sigma);
        rows.push_back({b, spec, budget.eps_c_sq, budget.g_random, budget.eps_b_sq, budget.g_biased});
    }
    return rows;
}

Table to_table(const std::vector<BudgetRow> &rows) {
    Table t;
    t.columns = {"B", "E", "F", "A", "eps_c_sq", "G_random", "eps_b_sq", "G_biased"};
    for (const auto &r : rows) {
        t.rows.push_back({r.bits, r.spec.E, r.spec.F, r.spec.A, r.eps_c_sq, r.g_random, r.eps_b_sq,
                          r.g_biased});
    }
    return t;
}

}  // namespace loqsim::harness
