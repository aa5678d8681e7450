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

#ifndef LOQSIM_STATS_HPP
#define LOQSIM_STATS_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace loqsim::stats {

/// Equal-width histogram of `values` over [lo, hi]; values outside are
/// clamped into the edge bins.
std::vector<std::uint64_t> histogram(std::span<const double> values, double lo, double hi,
                                     std::size_t bins);

struct ChiSquareResult {
    double statistic = 0.0;
    std::size_t dof = 0;
    double p_value = 1.0;
};

/// Pearson chi-square against equal expected counts.
ChiSquareResult chi_square_uniform(std::span<const std::uint64_t> counts);

struct KsResult {
    double statistic = 0.0;  // sup |F_n - F|
    std::size_t n = 0;
    double p_value = 1.0;
    /// Critical D at a given significance: the asymptotic Kolmogorov quantile
    /// with Stephens' finite-n correction.
    double critical(double alpha) const;
};

/// One-sample Kolmogorov-Smirnov test. `samples` is copied and sorted.
KsResult ks_test(std::vector<double> samples, const std::function<double(double)> &cdf);

/// Survival function of the Kolmogorov distribution, P(K > x).
double kolmogorov_sf(double x);

double mean(std::span<const double> v);
double variance(std::span<const double> v);  // unbiased
double lag1_autocorrelation(std::span<const double> v);

double normal_cdf(double x);

/// Slope of the least-squares line through the origin.
double slope_through_origin(std::span<const double> x, std::span<const double> y);

}  // namespace loqsim::stats

#endif  // LOQSIM_STATS_HPP
