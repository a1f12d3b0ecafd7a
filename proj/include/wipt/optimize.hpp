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
#ifndef WIPT_OPTIMIZE_HPP
#define WIPT_OPTIMIZE_HPP

#include "wipt/error.hpp"
#include "wipt/stats.hpp"
#include "wipt/wpc.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace wipt
{

struct Maximum
{
    double x = 0.0;
    double value = 0.0;
};

namespace detail
{
template <typename F>
double checked_eval(F &f, double x)
{
    const double v = f(x);
    if (!std::isfinite(v))
        throw solver_error("objective is not finite at x = " + std::to_string(x));
    return v;
}
} // namespace detail

// Golden-section search for a maximum of f on [lo, hi]. The returned x lies within tol of a local
// maximum; for unimodal f it is the global one, including maxima on the boundary.
template <typename F>
Maximum golden_section_max(F &&f, double lo, double hi, double tol)
{
    detail::require(lo < hi, "golden section needs lo < hi");
    detail::require(tol > 0.0, "golden section tolerance must be positive");

    constexpr double inv_phi = 0.6180339887498948482;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = detail::checked_eval(f, c);
    double fd = detail::checked_eval(f, d);

    while (b - a > tol)
    {
        if (fc >= fd)
        {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = detail::checked_eval(f, c);
        }
        else
        {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = detail::checked_eval(f, d);
        }
    }

    Maximum best = fc >= fd ? Maximum{c, fc} : Maximum{d, fd};
    for (double x : {a, b})
    {
        const double v = detail::checked_eval(f, x);
        if (v > best.value)
            best = {x, v};
    }
    return best;
}

struct BracketedMaximum
{
    Maximum best;
    std::vector<Maximum> scan; // the coarse grid, in order
};

// Scans an evenly spaced grid, refines every local maximum of the scan with golden-section search
// on its neighbouring cells, and keeps the best. Never returns less than the best grid value.
template <typename F>
BracketedMaximum bracket_and_refine(F &&f, double lo, double hi, std::size_t grid_points, double tol,
                                    std::size_t max_brackets = 8)
{
    detail::require(grid_points >= 3, "bracketing grid needs at least three points");
    detail::require(lo < hi, "bracketing needs lo < hi");

    BracketedMaximum out;
    out.scan.resize(grid_points);
    const double step = (hi - lo) / static_cast<double>(grid_points - 1);
    for (std::size_t i = 0; i < grid_points; ++i)
    {
        const double x = i + 1 == grid_points ? hi : lo + step * static_cast<double>(i);
        out.scan[i] = {x, detail::checked_eval(f, x)};
    }

    std::vector<std::size_t> peaks;
    for (std::size_t i = 0; i < grid_points; ++i)
    {
        const bool left_ok = i == 0 || out.scan[i].value >= out.scan[i - 1].value;
        const bool right_ok = i + 1 == grid_points || out.scan[i].value >= out.scan[i + 1].value;
        if (left_ok && right_ok)
            peaks.push_back(i);
    }
    if (peaks.size() > max_brackets)
    {
        std::partial_sort(peaks.begin(), peaks.begin() + static_cast<std::ptrdiff_t>(max_brackets), peaks.end(),
                          [&](std::size_t a, std::size_t b) { return out.scan[a].value > out.scan[b].value; });
        peaks.resize(max_brackets);
    }

    out.best = *std::max_element(out.scan.begin(), out.scan.end(),
                                 [](const Maximum &a, const Maximum &b) { return a.value < b.value; });
    for (std::size_t i : peaks)
    {
        const double a = out.scan[i == 0 ? 0 : i - 1].x;
        const double b = out.scan[std::min(i + 1, grid_points - 1)].x;
        const Maximum refined = golden_section_max(f, a, b, tol);
        if (refined.value > out.best.value)
            out.best = refined;
    }
    return out;
}

// Optimal switching point and the sampled objective curve.
struct TradeoffResult
{
    double tau_star = 0.0;
    double objective_star = 0.0;
    double std_error_star = 0.0;
    std::vector<CurvePoint> curve;
    bool feasible = true;
    double constraint_slack = 0.0;
};

struct SolverOptions
{
    double tau_tolerance = 1e-6;   // fraction of the slot length
    std::size_t grid_points = 64;  // coarse bracketing scan over [0, T]
    unsigned threads = 0;          // Monte Carlo workers, 0 = all cores
};

// Maximizes the Monte Carlo mean rate over tau in [0, T), for the objective's transmit power
// unless `tx_power` is given.
inline TradeoffResult optimize_tau_rate(const RateObjective &objective, const SolverOptions &opt = {},
                                        double tx_power = -1.0)
{
    const SlotConfig &cfg = objective.config();
    const double p = tx_power > 0.0 ? tx_power : cfg.tx_power;
    const double T = cfg.slot_length;
    auto mean_rate = [&](double tau) { return objective.at(tau, p).mean; };

    const auto found = bracket_and_refine(mean_rate, 0.0, T, opt.grid_points, opt.tau_tolerance * T);

    TradeoffResult r;
    for (const auto &pt : found.scan)
    {
        const SummaryStat s = objective.at(pt.x, p);
        r.curve.push_back({pt.x, s.mean, s.std_error});
    }
    const SummaryStat best = objective.at(found.best.x, p);
    r.tau_star = found.best.x;
    r.objective_star = best.mean;
    r.std_error_star = best.std_error;
    return r;
}

inline TradeoffResult optimize_tau_rate(const SlotConfig &cfg, const CsiModel &csi, std::size_t n_trials,
                                        std::uint64_t seed, const SolverOptions &opt = {})
{
    SlotConfig c = cfg;
    c.csi = csi;
    return optimize_tau_rate(RateObjective(c, n_trials, seed, opt.threads), opt);
}

// Maximizes the deterministic large-array energy efficiency over tau in (0, T).
inline TradeoffResult optimize_tau_ee(const SlotConfig &cfg, double rho, const SolverOptions &opt = {})
{
    cfg.validate();
    detail::require(rho >= 0.0 && rho <= 1.0, "CSI accuracy rho must lie in [0, 1]");
    const double T = cfg.slot_length;
    auto ee = [&](double tau) { return lsmimo_energy_efficiency(cfg, rho, tau); };

    const auto found = bracket_and_refine(ee, 0.0, T, opt.grid_points, opt.tau_tolerance * T);

    TradeoffResult r;
    for (const auto &pt : found.scan)
        r.curve.push_back({pt.x, pt.value, 0.0});
    r.tau_star = found.best.x;
    r.objective_star = found.best.value;
    return r;
}

// --- Transmit-power minimization under a rate requirement ------------------------------

struct PowerBounds
{
    double lo = 0.0;
    double hi = 0.0;
};

struct PowerSolution
{
    double tx_power = 0.0; // smallest feasible P, or the upper bound when infeasible
    bool feasible = false;
    TradeoffResult tradeoff; // optimized tau at tx_power
};

// Bisection on P with the optimized mean rate as the inner problem. The rate is nondecreasing in P
// for every tau, so the feasible set is an interval [P*, P_hi]. When even P_hi misses the target the
// result is reported infeasible with the negative slack at P_hi.
inline PowerSolution min_power_subject_to_rate(const RateObjective &objective, double min_rate, PowerBounds bounds,
                                               const SolverOptions &opt = {}, double power_tolerance = 1e-3)
{
    detail::require(min_rate > 0.0, "rate requirement must be positive");
    detail::require(bounds.lo > 0.0 && bounds.lo < bounds.hi, "power bounds must satisfy 0 < lo < hi");
    detail::require(power_tolerance > 0.0, "power tolerance must be positive");

    auto solve = [&](double p) {
        TradeoffResult t = optimize_tau_rate(objective, opt, p);
        t.constraint_slack = t.objective_star - min_rate;
        t.feasible = t.constraint_slack >= 0.0;
        return t;
    };

    TradeoffResult at_lo = solve(bounds.lo);
    if (at_lo.feasible)
        return {bounds.lo, true, std::move(at_lo)};

    TradeoffResult at_hi = solve(bounds.hi);
    if (!at_hi.feasible)
        return {bounds.hi, false, std::move(at_hi)};

    double lo = bounds.lo, hi = bounds.hi;
    while (hi - lo > power_tolerance * hi)
    {
        const double mid = 0.5 * (lo + hi);
        TradeoffResult t = solve(mid);
        if (t.feasible)
        {
            hi = mid;
            at_hi = std::move(t);
        }
        else
            lo = mid;
    }
    return {hi, true, std::move(at_hi)};
}

inline PowerSolution min_power_subject_to_rate(const SlotConfig &cfg, const CsiModel &csi, double min_rate,
                                               PowerBounds bounds, std::size_t n_trials, std::uint64_t seed,
                                               const SolverOptions &opt = {}, double power_tolerance = 1e-3)
{
    detail::require(bounds.lo > 0.0 && bounds.lo < bounds.hi, "power bounds must satisfy 0 < lo < hi");
    SlotConfig c = cfg;
    c.csi = csi;
    return min_power_subject_to_rate(RateObjective(c, n_trials, seed, opt.threads), min_rate, bounds, opt,
                                     power_tolerance);
}

} // namespace wipt

#endif
