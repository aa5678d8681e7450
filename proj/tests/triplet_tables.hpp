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


#ifndef LOQSIM_TESTS_TRIPLET_TABLES_HPP
#define LOQSIM_TESTS_TRIPLET_TABLES_HPP

#include <array>

#include "loqsim/format.hpp"

namespace loqsim::testdata {

inline constexpr std::array<int, 4> kTableQubits = {20, 30, 40, 50};

struct TripletTableRow {
    int bits;
    std::array<FormatSpec, 4> spec;  // one per kTableQubits entry
};

// Tabulated optimal triplets, random-state objective.
inline constexpr TripletTableRow kRandomTriplets[] = {
    {8, {{{4, 1, 3}, {4, 1, 3}, {4, 1, 3}, {5, 0, 3}}}},
    {9, {{{4, 1, 4}, {4, 1, 4}, {4, 1, 4}, {5, 1, 3}}}},
    {10, {{{4, 2, 4}, {4, 2, 4}, {4, 2, 4}, {5, 1, 4}}}},
    {11, {{{4, 2, 5}, {4, 2, 5}, {4, 2, 5}, {5, 2, 4}}}},
    {12, {{{4, 3, 5}, {4, 3, 5}, {4, 3, 5}, {5, 2, 5}}}},
    {13, {{{4, 3, 6}, {4, 3, 6}, {4, 3, 6}, {5, 3, 5}}}},
    {14, {{{4, 4, 6}, {4, 4, 6}, {4, 4, 6}, {5, 3, 6}}}},
    {15, {{{4, 4, 7}, {4, 4, 7}, {4, 4, 7}, {5, 4, 6}}}},
    {16, {{{4, 5, 7}, {4, 5, 7}, {4, 5, 7}, {5, 4, 7}}}},
    {17, {{{4, 5, 8}, {4, 5, 8}, {4, 5, 8}, {5, 5, 7}}}},
    {18, {{{4, 6, 8}, {4, 6, 8}, {5, 5, 8}, {5, 5, 8}}}},
    {19, {{{4, 6, 9}, {4, 6, 9}, {5, 6, 8}, {5, 6, 8}}}},
    {20, {{{4, 7, 9}, {4, 7, 9}, {5, 6, 9}, {5, 6, 9}}}},
    {21, {{{4, 7, 10}, {4, 7, 10}, {5, 7, 9}, {5, 7, 9}}}},
    {22, {{{4, 8, 10}, {4, 8, 10}, {5, 7, 10}, {5, 7, 10}}}},
    {23, {{{4, 8, 11}, {4, 8, 11}, {5, 8, 10}, {5, 8, 10}}}},
    {24, {{{4, 9, 11}, {4, 9, 11}, {5, 8, 11}, {5, 8, 11}}}},
    {25, {{{4, 9, 12}, {4, 9, 12}, {5, 9, 11}, {5, 9, 11}}}},
    {26, {{{4, 10, 12}, {4, 10, 12}, {5, 9, 12}, {5, 9, 12}}}},
    {27, {{{4, 10, 13}, {4, 10, 13}, {5, 10, 12}, {5, 10, 12}}}},
    {28, {{{4, 11, 13}, {4, 11, 13}, {5, 10, 13}, {5, 10, 13}}}},
    {29, {{{4, 11, 14}, {4, 11, 14}, {5, 11, 13}, {5, 11, 13}}}},
    {30, {{{4, 12, 14}, {4, 12, 14}, {5, 11, 14}, {5, 11, 14}}}},
    {31, {{{4, 12, 15}, {4, 12, 15}, {5, 12, 14}, {5, 12, 14}}}},
    {32, {{{4, 13, 15}, {4, 13, 15}, {5, 12, 15}, {5, 12, 15}}}},
    {33, {{{4, 13, 16}, {4, 13, 16}, {5, 13, 15}, {5, 13, 15}}}},
    {34, {{{4, 14, 16}, {4, 14, 16}, {5, 13, 16}, {5, 13, 16}}}},
    {35, {{{4, 14, 17}, {4, 14, 17}, {5, 14, 16}, {5, 14, 16}}}},
    {36, {{{4, 15, 17}, {4, 15, 17}, {5, 14, 17}, {5, 14, 17}}}},
    {37, {{{4, 15, 18}, {4, 15, 18}, {5, 15, 17}, {5, 15, 17}}}},
    {38, {{{4, 16, 18}, {5, 15, 18}, {5, 15, 18}, {5, 15, 18}}}},
    {39, {{{4, 16, 19}, {5, 16, 18}, {5, 16, 18}, {5, 16, 18}}}},
    {40, {{{4, 17, 19}, {5, 16, 19}, {5, 16, 19}, {5, 16, 19}}}},
};

// Tabulated optimal triplets, worst-case objective.
inline constexpr TripletTableRow kBiasedTriplets[] = {
    {8, {{{4, 1, 3}, {4, 1, 3}, {4, 1, 3}, {5, 0, 3}}}},
    {9, {{{4, 1, 4}, {4, 1, 4}, {4, 1, 4}, {5, 1, 3}}}},
    {10, {{{4, 2, 4}, {4, 2, 4}, {4, 2, 4}, {5, 1, 4}}}},
    {11, {{{4, 2, 5}, {4, 2, 5}, {4, 2, 5}, {5, 2, 4}}}},
    {12, {{{4, 3, 5}, {4, 3, 5}, {5, 2, 5}, {5, 2, 5}}}},
    {13, {{{4, 3, 6}, {4, 3, 6}, {5, 3, 5}, {5, 3, 5}}}},
    {14, {{{4, 4, 6}, {4, 4, 6}, {5, 3, 6}, {5, 3, 6}}}},
    {15, {{{4, 4, 7}, {4, 4, 7}, {5, 4, 6}, {5, 4, 6}}}},
    {16, {{{4, 5, 7}, {4, 5, 7}, {5, 4, 7}, {5, 4, 7}}}},
    {17, {{{4, 5, 8}, {4, 5, 8}, {5, 5, 7}, {5, 5, 7}}}},
    {18, {{{4, 6, 8}, {4, 6, 8}, {5, 5, 8}, {5, 5, 8}}}},
    {19, {{{4, 6, 9}, {4, 6, 9}, {5, 6, 8}, {5, 6, 8}}}},
    {20, {{{4, 7, 9}, {4, 7, 9}, {5, 6, 9}, {5, 6, 9}}}},
    {21, {{{4, 7, 10}, {4, 7, 10}, {5, 7, 9}, {5, 7, 9}}}},
    {22, {{{4, 8, 10}, {5, 7, 10}, {5, 7, 10}, {5, 7, 10}}}},
    {23, {{{4, 8, 11}, {5, 8, 10}, {5, 8, 10}, {5, 8, 10}}}},
    {24, {{{4, 9, 11}, {5, 8, 11}, {5, 8, 11}, {5, 8, 11}}}},
    {25, {{{4, 9, 12}, {5, 9, 11}, {5, 9, 11}, {5, 9, 11}}}},
    {26, {{{4, 10, 12}, {5, 9, 12}, {5, 9, 12}, {5, 9, 12}}}},
    {27, {{{4, 10, 13}, {5, 10, 12}, {5, 10, 12}, {5, 10, 12}}}},
    {28, {{{4, 11, 13}, {5, 10, 13}, {5, 10, 13}, {5, 10, 13}}}},
    {29, {{{4, 11, 14}, {5, 11, 13}, {5, 11, 13}, {5, 11, 13}}}},
    {30, {{{4, 12, 14}, {5, 11, 14}, {5, 11, 14}, {5, 11, 14}}}},
    {31, {{{4, 12, 15}, {5, 12, 14}, {5, 12, 14}, {5, 12, 14}}}},
    {32, {{{5, 12, 15}, {5, 12, 15}, {5, 12, 15}, {5, 12, 15}}}},
    {33, {{{5, 13, 15}, {5, 13, 15}, {5, 13, 15}, {5, 13, 15}}}},
    {34, {{{5, 13, 16}, {5, 13, 16}, {5, 13, 16}, {5, 13, 16}}}},
    {35, {{{5, 14, 16}, {5, 14, 16}, {5, 14, 16}, {5, 14, 16}}}},
    {36, {{{5, 14, 17}, {5, 14, 17}, {5, 14, 17}, {5, 14, 17}}}},
    {37, {{{5, 15, 17}, {5, 15, 17}, {5, 15, 17}, {5, 15, 17}}}},
    {38, {{{5, 15, 18}, {5, 15, 18}, {5, 15, 18}, {5, 15, 18}}}},
    {39, {{{5, 16, 18}, {5, 16, 18}, {5, 16, 18}, {5, 16, 18}}}},
    {40, {{{5, 16, 19}, {5, 16, 19}, {5, 16, 19}, {5, 16, 19}}}},
};

struct BudgetTableRow {
    int bits;
    double eps_c_sq;  // 3 significant digits
    double g_random;  // exact below B = 28, 3 significant digits above
    double eps_b_sq;
    int g_biased;
};

// Q = 50, sigma = 1/2.
inline constexpr BudgetTableRow kBudgetQ50[] = {
    {8, 1.35e-01, 2, 4.04e-01, 1},
    {12, 8.42e-03, 30, 2.53e-02, 3},
    {16, 5.26e-04, 475, 1.58e-03, 13},
    {20, 3.29e-05, 7600, 9.87e-05, 50},
    {24, 2.06e-06, 121599, 6.17e-06, 201},
    {28, 1.28e-07, 1.94e+06, 3.85e-07, 805},
    {32, 8.03e-09, 3.11e+07, 2.41e-08, 3221},
    {36, 5.02e-10, 4.98e+08, 1.51e-09, 12884},
    {40, 3.14e-11, 7.96e+09, 9.43e-11, 51491},
};

}  // namespace loqsim::testdata

#endif  // LOQSIM_TESTS_TRIPLET_TABLES_HPP
