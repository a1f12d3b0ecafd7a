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
#ifndef WIPT_STATS_HPP
#define WIPT_STATS_HPP

#include <cmath>
#include <cstddef>
#include <span>

namespace wipt
{

// Neumaier-compensated running sum.
class CompensatedSum
{
public:
    void add(double x) noexcept
    {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            compensation_ += (sum_ - t) + x;
        else
            compensation_ += (x - t) + sum_;
        sum_ = t;
    }

    double value() const noexcept { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

struct SummaryStat
{
    double mean = 0.0;
    double std_error = 0.0;
    double ci95_low = 0.0;
    double ci95_high = 0.0;
    std::size_t n = 0;
};

inline constexpr double ci95_z = 1.96;

// Statistics of a fixed-order sample. A single sample has std_error 0 by convention.
inline SummaryStat summarize(std::span<const double> samples)
{
    SummaryStat s;
    s.n = samples.size();
    if (s.n == 0)
        return s;

    CompensatedSum sum;
    for (double x : samples)
        sum.add(x);
    s.mean = sum.value() / static_cast<double>(s.n);

    if (s.n > 1)
    {
        CompensatedSum sq;
        for (double x : samples)
            sq.add((x - s.mean) * (x - s.mean));
        const double variance = sq.value() / static_cast<double>(s.n - 1);
        s.std_error = std::sqrt(variance / static_cast<double>(s.n));
    }
    s.ci95_low = s.mean - ci95_z * s.std_error;
    s.ci95_high = s.mean + ci95_z * s.std_error;
    return s;
}

// Deterministic value treated as a one-sample statistic.
inline SummaryStat exact_stat(double value) noexcept
{
    return {value, 0.0, value, value, 1};
}

} // namespace wipt

#endif
