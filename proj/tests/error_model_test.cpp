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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "loqsim/circuits.hpp"
#include "loqsim/error_model.hpp"
#include "triplet_tables.hpp"

using namespace loqsim;

namespace {

constexpr double kPi = std::numbers::pi;

// Mass of Porter-Thomas amplitudes below mu: integral_0^x t e^-t dt by
// composite Simpson, independent of the closed form under test.
double lost_mass_quadrature(double x) {
    const int n = 20000;
    const double h = x / n;
    double s = 0;
    for (int i = 0; i <= n; ++i) {
        const double t = i * h;
        const double w = (i == 0 || i == n) ? 1 : (i % 2 ? 4 : 2);
        s += w * t * std::exp(-t);
    }
    return s * h / 3;
}

// sinh(x)/x - 1 and sin(x)/x - 1 by their Taylor series, |x| <= 0.25.
double sinhc_m1(double x) {
    const double y = x * x;
    return y / 6 * (1 + y / 20 * (1 + y / 42 * (1 + y / 72 * (1 + y / 110))));
}
double sinc_m1(double x) {
    const double y = -x * x;
    return y / 6 * (1 + y / 20 * (1 + y / 42 * (1 + y / 72 * (1 + y / 110))));
}

// E|e^(eps + i gamma) - 1|^2 for eps, gamma uniform on the rounding cells,
// exactly: E e^(2 eps) - 2 E e^eps E cos gamma + 1, expanded so nothing of
// order 1 cancels.
double exact_rounding_mse(const FormatSpec &s) {
    const double h = s.log_step() / 2, g = s.phase_step() / 2;
    const double a = sinhc_m1(2 * h), b = sinhc_m1(h), c = sinc_m1(g);
    return a - 2 * b - 2 * c - 2 * b * c;
}

int significant_digits_match(double a, double b, int digits) {
    const double scale = std::pow(10.0, digits - 1 - std::floor(std::log10(std::abs(b))));
    return std::llround(a * scale) == std::llround(b * scale);
}

}  // namespace

TEST(error_model, underflow_loss_matches_quadrature) {
    for (int q : {10, 20, 30, 40, 50}) {
        for (FormatSpec s : {FormatSpec{4, 5, 7}, FormatSpec{5, 0, 3}, FormatSpec{3, 9, 12}, FormatSpec{2, 1, 3}}) {
            const double x = std::ldexp(1.0, q) * s.min_modulus() * s.min_modulus();
            if (x > 30) continue;
            const double phi = underflow_loss(q, s);
            const double oracle = lost_mass_quadrature(x);
            if (oracle > 1e-200) {
                EXPECT_NEAR(phi, oracle, 1e-9 * oracle + 1e-300) << "q=" << q << " " << s.str();
            }
        }
    }
}

TEST(error_model, underflow_loss_small_argument) {
    // phi ~ x^2 / 2 with relative correction ~ 2x/3.
    for (int q : {10, 20, 30, 40}) {
        const FormatSpec s{4, 5, 7};
        const double x = std::ldexp(1.0, q) * s.min_modulus() * s.min_modulus();
        if (x > 1e-3) continue;
        EXPECT_NEAR(underflow_loss(q, s) / (x * x / 2), 1.0, x) << q;
    }
    EXPECT_GE(underflow_loss(10, FormatSpec{5, 4, 7}), 0.0);
    EXPECT_LT(underflow_loss(10, FormatSpec{5, 4, 7}), 1e-40);
}

TEST(error_model, rounding_term_matches_exact_expectation) {
    for (FormatSpec s : {FormatSpec{4, 5, 7}, FormatSpec{4, 9, 11}, FormatSpec{5, 16, 19}, FormatSpec{4, 2, 5}}) {
        const double model = rounding_variance_term(s) / 12;
        const double exact = exact_rounding_mse(s);
        const double order = s.log_step() * s.log_step() + s.phase_step() * s.phase_step();
        EXPECT_NEAR(model / exact, 1.0, order) << s.str();
        EXPECT_GT(std::abs(model / exact - 1.0), 0.0)
            << s.str();
    }
}

TEST(error_model, conversion_error_formulas) {
    FormatSpec s{4, 5, 7};
    const double r = (std::ldexp(1.0, -10) + 4 * kPi * kPi * std::ldexp(1.0, -14));
    const double phi = underflow_loss(20, s);
    EXPECT_DOUBLE_EQ(conversion_error_random(20, s), phi + (1 - phi) * r / 12);
    const double nmu2 = std::ldexp(1.0, 20) * s.min_modulus() * s.min_modulus();
    EXPECT_DOUBLE_EQ(conversion_error_bound(20, s), nmu2 + r / 4);
    EXPECT_DOUBLE_EQ(cumulative_error_random(10, 20, s), 10 * conversion_error_random(20, s));
    EXPECT_DOUBLE_EQ(cumulative_error_biased(10, 20, s), 10 * std::sqrt(conversion_error_bound(20, s)));
    EXPECT_DOUBLE_EQ(cumulative_error_random(0, 20, s), 0.0);
}

TEST(error_model, random_triplet_table) {
    for (const auto &row : testdata::kRandomTriplets) {
        for (std::size_t j = 0; j < testdata::kTableQubits.size(); ++j) {
            EXPECT_EQ(optimal_triplet(row.bits, testdata::kTableQubits[j], Regime::random), row.spec[j])
                << "B=" << row.bits << " Q=" << testdata::kTableQubits[j];
        }
    }
}

TEST(error_model, biased_triplet_table) {
    for (const auto &row : testdata::kBiasedTriplets) {
        for (std::size_t j = 0; j < testdata::kTableQubits.size(); ++j) {
            EXPECT_EQ(optimal_triplet(row.bits, testdata::kTableQubits[j], Regime::biased), row.spec[j])
                << "B=" << row.bits << " Q=" << testdata::kTableQubits[j];
        }
    }
}

TEST(error_model, optimal_triplet_is_a_true_minimum) {
    for (int b : {8, 13, 21, 34}) {
        for (int q : {12, 26}) {
            const FormatSpec best = optimal_triplet(b, q, Regime::random);
            EXPECT_EQ(best.bits(), b);
            const double e = conversion_error_random(q, best);
            for (int E = 1; E <= 8; ++E) {
                for (int F = 0; E + F + 2 <= b; ++F) {
                    const FormatSpec other{E, F, b - E - F};
                    EXPECT_LE(e, conversion_error_random(q, other)) << other.str();
                }
            }
        }
    }
}

TEST(error_model, optimal_triplet_rejects_tiny_budgets) {
    EXPECT_THROW(optimal_triplet(2, 20, Regime::random), std::invalid_argument);
    EXPECT_EQ(optimal_triplet(3, 20, Regime::random), (FormatSpec{1, 0, 2}));
}

TEST(error_model, budget_table_q50) {
    for (const auto &row : testdata::kBudgetQ50) {
        const FormatSpec s = optimal_triplet(row.bits, 50, Regime::random);
        const ErrorBudget b = error_budget(50, s, 0.5);
        EXPECT_TRUE(significant_digits_match(b.eps_c_sq, row.eps_c_sq, 3)) << row.bits << " " << b.eps_c_sq;
        EXPECT_TRUE(significant_digits_match(b.eps_b_sq, row.eps_b_sq, 3)) << row.bits << " " << b.eps_b_sq;
        EXPECT_LE(std::abs(static_cast<double>(b.g_biased) - row.g_biased), 1.0) << row.bits;
        if (row.bits <= 24) {
            EXPECT_EQ(static_cast<double>(b.g_random), row.g_random) << row.bits;
        } else {
            // The large tabulated counts are the computed ones cut to three
            // significant digits.
            const double g = static_cast<double>(b.g_random);
            const double scale = std::pow(10.0, std::floor(std::log10(g)) - 2);
            EXPECT_EQ(std::floor(g / scale) * scale, row.g_random) << row.bits << " " << g;
        }
    }
}

TEST(error_model, budgets_round_to_nearest) {
    // B=16: 0.25 / 0.00158 = 12.58 -> 13; B=8 random: 0.25 / 0.1347 = 1.855 -> 2.
    EXPECT_EQ(max_gates(0.5, 50, FormatSpec{5, 4, 7}, Regime::biased), 13u);
    EXPECT_EQ(max_gates(0.5, 50, FormatSpec{5, 0, 3}, Regime::random), 2u);
    EXPECT_EQ(max_gates(0.0, 50, FormatSpec{5, 4, 7}, Regime::random), 0u);
    EXPECT_EQ(max_gates(0.0, 50, FormatSpec{5, 4, 7}, Regime::biased), 0u);
    EXPECT_THROW(max_gates(-0.1, 50, FormatSpec{5, 4, 7}, Regime::random), std::invalid_argument);
}

TEST(error_model, fidelity_bound) {
    EXPECT_DOUBLE_EQ(fidelity_lower_bound(0.25), 0.765625);
    EXPECT_DOUBLE_EQ(fidelity_lower_bound(0.0), 1.0);
    EXPECT_DOUBLE_EQ(fidelity_lower_bound(2.0), 0.0);
    EXPECT_DOUBLE_EQ(fidelity_lower_bound(3.0), 0.0);
    EXPECT_THROW(fidelity_lower_bound(-1.0), std::invalid_argument);
}

TEST(error_model, phase_bits_estimate) {
    for (int f : {0, 5, 16}) {
        const auto p = optimal_phase_bits(f);
        EXPECT_NEAR(p.exact, f + std::log2(2 * kPi), 1e-12);
        EXPECT_EQ(p.lower, f + 2);
        EXPECT_EQ(p.upper, f + 3);
    }
}

TEST(error_model, regime_names) {
    EXPECT_EQ(parse_regime("random"), Regime::random);
    EXPECT_EQ(parse_regime("biased"), Regime::biased);
    EXPECT_EQ(to_string(Regime::biased), "biased");
    EXPECT_THROW(parse_regime("other"), std::invalid_argument);
}

TEST(gate_weight, table) {
    FormatSpec s{4, 5, 7};
    EXPECT_EQ(gate_weight(gates::x(0), s), 0.0);
    EXPECT_EQ(gate_weight(gates::y(0), s), 0.0);
    EXPECT_EQ(gate_weight(gates::cnot(0, 1), s), 0.0);
    EXPECT_EQ(gate_weight(gates::swap(0, 1), s), 0.0);
    EXPECT_EQ(gate_weight(gates::toffoli(0, 1, 2), s), 0.0);
    EXPECT_EQ(gate_weight(gates::z(0), s), 0.0);
    EXPECT_EQ(gate_weight(gates::cz(0, 1), s), 0.0);
    EXPECT_EQ(gate_weight(gates::h(0), s), 1.0);
    EXPECT_EQ(gate_weight(gates::u3(0, 0.1, 0.2, 0.3), s), 1.0);
    // Controlled phase: exact below A, otherwise 1/2 halved by the control.
    EXPECT_EQ(gate_weight(gates::cp(0, 1, 6), s), 0.0);
    EXPECT_EQ(gate_weight(gates::cp(0, 1, 7), s), 0.25);
    EXPECT_EQ(gate_weight(gates::root_z(0, 2), s), 0.0);
    EXPECT_EQ(gate_weight(gates::root_z(0, 3), s), 0.5);
    EXPECT_EQ(gate_weight(gates::root_z(0, 1 << 9), s), 0.5);
    // Extra controls halve again.
    EXPECT_EQ(gate_weight(controlled(gates::h(0), {1}), s), 0.5);
    EXPECT_EQ(gate_weight(controlled(gates::h(0), {1, 2}), s), 0.25);
    EXPECT_EQ(gate_weight(controlled(gates::cp(0, 1, 9), {2}), s), 0.125);
}

TEST(gate_weight, exact_phase_steps) {
    FormatSpec s{4, 5, 7};
    EXPECT_EQ(exact_phase_steps(gates::cp(0, 1, 4), s), 4u);
    EXPECT_EQ(exact_phase_steps(adjoint(gates::cp(0, 1, 4)), s), 124u);
    EXPECT_EQ(exact_phase_steps(gates::cp(0, 1, 0), s), 64u);
    EXPECT_EQ(exact_phase_steps(gates::z(0), s), 64u);
    EXPECT_EQ(exact_phase_steps(gates::cz(0, 1), s), 64u);
    EXPECT_EQ(exact_phase_steps(gates::root_z(0, 4), s), 16u);
    EXPECT_EQ(exact_phase_steps(gates::root_z(0, 1), s), 64u);
    EXPECT_FALSE(exact_phase_steps(gates::cp(0, 1, 7), s).has_value());
    EXPECT_FALSE(exact_phase_steps(gates::root_z(0, 3), s).has_value());
    EXPECT_FALSE(exact_phase_steps(gates::h(0), s).has_value());
}

TEST(gate_weight, effective_count_of_random_cycles) {
    FormatSpec s{4, 5, 7};
    EXPECT_EQ(effective_gate_count(random_cycles(6, 4, 1), s), 24.0);
    EXPECT_EQ(effective_gate_count({}, s), 0.0);
    // QFT on 12 qubits at A = 7: 12 Hadamards plus 15 unresolved phases at 1/4.
    EXPECT_EQ(effective_gate_count(qft(12), s), 15.75);
    EXPECT_EQ(effective_gate_count(aqft(12), FormatSpec{4, 9, 11}), 12.0);
}

TEST(error_budget, bundle) {
    const ErrorBudget b = error_budget(50, FormatSpec{5, 4, 7}, 0.5);
    EXPECT_EQ(b.qubits, 50);
    EXPECT_EQ(b.n, std::ldexp(1.0, 50));
    EXPECT_EQ(b.g_random, 475u);
    EXPECT_EQ(b.g_biased, 13u);
    EXPECT_DOUBLE_EQ(b.sigma_sq_random(10), 10 * b.eps_c_sq);
    EXPECT_DOUBLE_EQ(b.fidelity_bound, fidelity_lower_bound(0.25));
}
