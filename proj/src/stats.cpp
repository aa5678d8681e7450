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

#include "loqsim/stats.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "loqsim/numeric.hpp"

namespace loqsim::stats {

std::vector<std::uint64_t> histogram(std::span<const double> values, double lo, double hi,
                                     std::size_t bins) {
    if (bins == 0 || !(hi > lo)) throw std::invalid_argument("histogram needs bins > 0 and hi > lo");
    std::vector<std::uint64_t> counts(bins, 0);
    const double scale = static_cast<double>(bins) / (hi - lo);
    for (double v : values) {
        auto b = static_cast<std::int64_t>(std::floor((v - lo) * scale));
        b = std::clamp<std::int64_t>(b, 0, static_cast<std::int64_t>(bins) - 1);
        ++counts[static_cast<std::size_t>(b)];
    }
    return counts;
}

ChiSquareResult chi_square_uniform(std::span<const std::uint64_t> counts) {
    if (counts.size() < 2) throw std::invalid_argument("chi-square needs at least 2 bins");
    double total = 0;
    for (auto c : counts) total += static_cast<double>(c);
    const double expected = total / static_cast<double>(counts.size());
    if (!(expected > 0)) throw std::invalid_argument("chi-square needs a nonempty sample");
    double stat = 0;
    for (auto c : counts) {
        const double d = static_cast<double>(c) - expected;
        stat += d * d / expected;
    }
    ChiSquareResult r;
    r.statistic = stat;
    r.dof = counts.size() - 1;
    r.p_value = boost::math::cdf(boost::math::complement(
        boost::math::chi_squared(static_cast<double>(r.dof)), stat));
    return r;
}

double kolmogorov_sf(double x) {
    if (x <= 0) return 1.0;
    if (x < 0.2) return 1.0;
    // P(K > x) = 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 x^2)
    double sum = 0, term = 0;
    for (int j = 1; j <= 100; ++j) {
        term = std::exp(-2.0 * j * j * x * x);
        sum += (j % 2 ? 1.0 : -1.0) * term;
        if (term < 1e-16) break;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

double KsResult::critical(double alpha) const {
    // Invert the asymptotic survival function by bisection.
    double lo = 0.2, hi = 5.0;
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        (kolmogorov_sf(mid) > alpha ? lo : hi) = mid;
    }
    const double sn = std::sqrt(static_cast<double>(n));
    // Stephens' finite-n correction.
    return 0.5 * (lo + hi) / (sn + 0.12 + 0.11 / sn);
}

KsResult ks_test(std::vector<double> samples, const std::function<double(double)> &cdf) {
    if (samples.empty()) throw std::invalid_argument("KS test needs samples");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
    }
    KsResult r;
    r.statistic = d;
    r.n = samples.size();
    const double sn = std::sqrt(n);
    r.p_value = kolmogorov_sf((sn + 0.12 + 0.11 / sn) * d);
    return r;
}

double mean(std::span<const double> v) {
    if (v.empty()) throw std::invalid_argument("mean of empty sample");
    CompensatedSum s;
    for (double x : v) s += x;
    return s.value() / static_cast<double>(v.size());
}

double variance(std::span<const double> v) {
    if (v.size() < 2) throw std::invalid_argument("variance needs at least 2 samples");
    const double m = mean(v);
    CompensatedSum s;
    for (double x : v) s += (x - m) * (x - m);
    return s.value() / static_cast<double>(v.size() - 1);
}

double lag1_autocorrelation(std::span<const double> v) {
    if (v.size() < 3) throw std::invalid_argument("autocorrelation needs at least 3 samples");
    const double m = mean(v);
    CompensatedSum num, den;
    for (std::size_t i = 0; i < v.size(); ++i) {
        den += (v[i] - m) * (v[i] - m);
        if (i + 1 < v.size()) num += (v[i] - m) * (v[i + 1] - m);
    }
    return num.value() / den.value();
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double slope_through_origin(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.empty()) throw std::invalid_argument("slope needs paired samples");
    CompensatedSum xy, xx;
    for (std::size_t i = 0; i < x.size(); ++i) {
        xy += x[i] * y[i];
        xx += x[i] * x[i];
    }
    return xy.value() / xx.value();
}

}  // namespace loqsim::stats
