// SPDX-License-Identifier: Apache-2.0
//
// wipt-sim: Monte Carlo simulator for multi-antenna wireless information and power transfer
// Copyright (C) 2026 The wipt-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#ifndef WIPT_TESTS_ORACLES_HPP
#define WIPT_TESTS_ORACLES_HPP

// Reference computations used by the tests. They deliberately avoid the library's own
// evaluation paths: closed forms are checked against quadrature or sampling, optimizers against
// dense grid scans.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle
{

struct MeanSe
{
    double mean = 0.0;
    double se = 0.0;
};

inline MeanSe mean_se(const std::vector<double> &x)
{
    const double n = static_cast<double>(x.size());
    const double m = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : x)
        ss += (v - m) * (v - m);
    return {m, x.size() > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0};
}

inline double correlation(const std::vector<double> &a, const std::vector<double> &b)
{
    const double n = static_cast<double>(a.size());
    const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
    const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        sab += (a[i] - ma) * (b[i] - mb);
        saa += (a[i] - ma) * (a[i] - ma);
        sbb += (b[i] - mb) * (b[i] - mb);
    }
    return sab / std::sqrt(saa * sbb);
}

// One-sample Kolmogorov-Smirnov statistic against a continuous CDF.
inline double ks_statistic(std::vector<double> x, const std::function<double(double)> &cdf)
{
    std::sort(x.begin(), x.end());
    const double n = static_cast<double>(x.size());
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        const double f = cdf(x[i]);
        d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
    }
    return d;
}

// Asymptotic KS critical value at the 1% level.
inline double ks_critical_1pct(std::size_t n) { return 1.628 / std::sqrt(static_cast<double>(n)); }

// Composite Simpson rule with n (even) intervals.
inline double simpson(const std::function<double(double)> &f, double a, double b, int n = 20000)
{
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i)
        s += f(a + h * i) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

// E[max of 2^bits i.i.d. |h~^H c|^2] for isotropic codewords. Each term is Beta(1, Nt - 1),
// CDF 1 - (1 - x)^(Nt - 1), so the mean of the maximum is the integral of 1 - F(x)^N.
inline double rvq_direction_gain_by_quadrature(unsigned bits, int nt)
{
    const double n = std::ldexp(1.0, static_cast<int>(bits));
    auto survival = [&](double x) {
        const double cdf = 1.0 - std::pow(1.0 - x, nt - 1);
        return 1.0 - std::pow(cdf, n);
    };
    return simpson(survival, 0.0, 1.0, 200000);
}

struct GridMax
{
    double x = 0.0;
    double value = 0.0;
    double step = 0.0;
};

// Dense scan of f over n + 1 evenly spaced points of [lo, hi].
inline GridMax grid_max(const std::function<double(double)> &f, double lo, double hi, std::size_t n)
{
    GridMax best{lo, f(lo), (hi - lo) / static_cast<double>(n)};
    for (std::size_t i = 1; i <= n; ++i)
    {
        const double x = lo + best.step * static_cast<double>(i);
        const double v = f(x);
        if (v > best.value)
        {
            best.x = x;
            best.value = v;
        }
    }
    return best;
}

} // namespace oracle

#endif
