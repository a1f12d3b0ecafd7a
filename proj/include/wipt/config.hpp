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
#ifndef WIPT_CONFIG_HPP
#define WIPT_CONFIG_HPP

#include "wipt/channel.hpp"
#include "wipt/error.hpp"
#include "wipt/experiment.hpp"
#include "wipt/format.hpp"
#include "wipt/optimize.hpp"
#include "wipt/swipt.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace wipt
{

// Every key a run configuration may carry, in the order the config echo writes them.
inline constexpr std::array<std::string_view, 24> run_config_keys = {
    "name",     "mode",        "T_ms",         "sigma2_dbm", "P_dbm",    "P0_dbm",   "theta",    "d_m",
    "d_er_m",   "nu",          "Nt",           "Nr",         "B",        "rho",      "sweep_param", "sweep_values",
    "n_trials", "seed",        "tau_grid_points", "R_min",   "P_lo_dbm", "P_hi_dbm", "strategy", "knob_points",
};

inline bool is_run_config_key(std::string_view key)
{
    return std::find(run_config_keys.begin(), run_config_keys.end(), key) != run_config_keys.end();
}

// Flat key=value document, one entry per line, '#' starts a comment. Values keep the text the
// user wrote so the echo reproduces it exactly; typing happens in resolve().
class RunConfig
{
public:
    struct Entry
    {
        std::string text;
        int line = 0; // 0 for programmatic or command-line values
    };

    static RunConfig parse(std::istream &in)
    {
        RunConfig cfg;
        std::string raw;
        int line = 0;
        while (std::getline(in, raw))
        {
            ++line;
            if (const auto hash = raw.find('#'); hash != std::string::npos)
                raw.erase(hash);
            const std::string text = trim(raw);
            if (text.empty())
                continue;
            const auto eq = text.find('=');
            if (eq == std::string::npos)
                throw config_error("expected key=value, got `" + text + "`", {}, line);
            const std::string key = trim(text.substr(0, eq));
            if (cfg.contains(key))
                throw config_error("duplicate key", key, line);
            cfg.set(key, trim(text.substr(eq + 1)), line);
        }
        return cfg;
    }

    static RunConfig parse(std::string_view text)
    {
        std::istringstream in{std::string(text)};
        return parse(in);
    }

    // Adds or replaces a value. Unknown keys are rejected.
    void set(const std::string &key, std::string text, int line = 0)
    {
        if (key.empty())
            throw config_error("empty key", {}, line);
        if (!is_run_config_key(key))
            throw config_error("unknown key", key, line);
        entries_[key] = {std::move(text), line};
    }

    // Applies a `key=value` override from the command line.
    void apply_override(std::string_view assignment)
    {
        const auto eq = assignment.find('=');
        if (eq == std::string_view::npos)
            throw config_error("override must be key=value, got `" + std::string(assignment) + "`");
        set(trim(std::string(assignment.substr(0, eq))), trim(std::string(assignment.substr(eq + 1))));
    }

    bool contains(const std::string &key) const { return entries_.count(key) != 0; }

    const Entry *find(const std::string &key) const
    {
        const auto it = entries_.find(key);
        return it == entries_.end() ? nullptr : &it->second;
    }

    // All set keys in canonical order.
    std::string echo() const
    {
        std::string out;
        for (std::string_view key : run_config_keys)
            if (const Entry *e = find(std::string(key)))
                out += std::string(key) + "=" + e->text + "\n";
        return out;
    }

private:
    static std::string trim(const std::string &s)
    {
        const auto first = s.find_first_not_of(" \t\r");
        if (first == std::string::npos)
            return {};
        const auto last = s.find_last_not_of(" \t\r");
        return s.substr(first, last - first + 1);
    }

    std::map<std::string, Entry> entries_;
};

// --- Built-in preset configurations ------------------------------------------------------

inline RunConfig preset_run_config(std::string_view name)
{
    if (name == "fig5")
        return RunConfig::parse(std::string_view(
            "name=fig5\nmode=rate_tradeoff\nT_ms=5\nsigma2_dbm=-125\nP_dbm=30\nP0_dbm=30\ntheta=0.9\n"
            "d_m=10\nnu=4\nNt=4\nNr=4\nB=0\nsweep_param=B\nsweep_values=0,2,4,full\n"
            "n_trials=10000\nseed=1\ntau_grid_points=64\n"));
    if (name == "fig6")
        return RunConfig::parse(std::string_view(
            "name=fig6\nmode=ee_tradeoff\nT_ms=5\nsigma2_dbm=-125\nP_dbm=30\nP0_dbm=30\ntheta=0.9\n"
            "d_m=50\nnu=4\nNt=100\nNr=100\nrho=0.9\nsweep_param=Nt\nsweep_values=50,100,200\n"
            "n_trials=1\nseed=1\ntau_grid_points=64\n"));
    throw config_error("unknown preset `" + std::string(name) + "` (expected fig5 or fig6)");
}

// --- Typed view ---------------------------------------------------------------------------

enum class RunMode
{
    RateTradeoff,
    EeTradeoff,
    ReRegion,
    Separated,
    MinPower,
};

struct ResolvedRun
{
    RunMode mode = RunMode::RateTradeoff;
    ExperimentSpec experiment; // base config, sweep, trials, seed, solver grid
    double min_rate = 0.0;     // min_power
    PowerBounds power_bounds;  // min_power, Watts
    std::vector<BeamStrategy> strategies; // separated
    std::size_t knob_points = 21;         // re_region, separated
};

namespace detail
{
class Resolver
{
public:
    explicit Resolver(const RunConfig &cfg) : cfg_(cfg) {}

    const RunConfig::Entry &required(const std::string &key) const
    {
        const auto *e = cfg_.find(key);
        if (!e)
            throw config_error("missing required key", key);
        return *e;
    }

    double number(const std::string &key) const { return to_number(key, required(key)); }

    std::optional<double> optional_number(const std::string &key) const
    {
        const auto *e = cfg_.find(key);
        return e ? std::optional<double>(to_number(key, *e)) : std::nullopt;
    }

    template <typename Integer>
    Integer integer(const std::string &key, Integer fallback, Integer min_value) const
    {
        const auto *e = cfg_.find(key);
        if (!e)
            return fallback;
        Integer v{};
        if (!parse_integer(e->text, v))
            throw config_error("expected an integer, got `" + e->text + "`", key, e->line);
        if (v < min_value)
            throw config_error("must be at least " + std::to_string(min_value), key, e->line);
        return v;
    }

    [[noreturn]] void fail(const std::string &key, const std::string &message) const
    {
        const auto *e = cfg_.find(key);
        throw config_error(message, key, e ? e->line : 0);
    }

    std::vector<std::string> list(const std::string &key) const
    {
        std::vector<std::string> items;
        std::string item;
        std::istringstream in(required(key).text);
        while (std::getline(in, item, ','))
        {
            const auto first = item.find_first_not_of(" \t");
            const auto last = item.find_last_not_of(" \t");
            if (first == std::string::npos)
                fail(key, "empty list item");
            items.push_back(item.substr(first, last - first + 1));
        }
        if (items.empty())
            fail(key, "empty list");
        return items;
    }

private:
    static double to_number(const std::string &key, const RunConfig::Entry &e)
    {
        double v = 0.0;
        if (!parse_number(e.text, v) || !std::isfinite(v))
            throw config_error("expected a finite number, got `" + e.text + "`", key, e.line);
        return v;
    }

    const RunConfig &cfg_;
};

inline RunMode parse_mode(const Resolver &r)
{
    const auto &e = r.required("mode");
    if (e.text == "rate_tradeoff")
        return RunMode::RateTradeoff;
    if (e.text == "ee_tradeoff")
        return RunMode::EeTradeoff;
    if (e.text == "re_region")
        return RunMode::ReRegion;
    if (e.text == "separated")
        return RunMode::Separated;
    if (e.text == "min_power")
        return RunMode::MinPower;
    throw config_error("unknown mode `" + e.text + "` (rate_tradeoff, ee_tradeoff, re_region, separated, min_power)",
                       "mode", e.line);
}

// "full" or a nonnegative bit count.
inline double parse_feedback_value(const std::string &text, const Resolver &r, const std::string &key)
{
    if (text == "full")
        return full_feedback;
    unsigned bits = 0;
    if (!parse_integer(text, bits) || bits > max_feedback_bits)
        r.fail(key, "feedback bits must be an integer in [0, " + std::to_string(max_feedback_bits) +
                        "] or `full`, got `" + text + "`");
    return static_cast<double>(bits);
}

inline Eigen::Index antenna_key(const Resolver &r, const std::string &key)
{
    const double v = r.number(key);
    if (!(v >= 1.0) || v != std::floor(v) || v > 1e6)
        r.fail(key, "antenna count must be a positive integer");
    return static_cast<Eigen::Index>(v);
}
} // namespace detail

// Validates every value and converts units: ms -> s, dBm -> W, distance -> path gain.
inline ResolvedRun resolve(const RunConfig &cfg)
{
    const detail::Resolver r(cfg);
    ResolvedRun run;
    run.mode = detail::parse_mode(r);

    ExperimentSpec &spec = run.experiment;
    if (const auto *name = cfg.find("name"))
        spec.name = name->text;
    else
        spec.name = "custom";

    SlotConfig &base = spec.base_config;
    const double T_ms = r.number("T_ms");
    if (!(T_ms > 0.0))
        r.fail("T_ms", "slot length must be positive");
    base.slot_length = T_ms * 1e-3;
    base.noise_power = dbm_to_watts(r.number("sigma2_dbm"));
    base.tx_power = dbm_to_watts(r.number("P_dbm"));
    base.circuit_power = dbm_to_watts(r.number("P0_dbm"));
    base.efficiency = r.number("theta");
    if (!(base.efficiency > 0.0 && base.efficiency <= 1.0))
        r.fail("theta", "conversion efficiency must lie in (0, 1]");

    const double d = r.number("d_m");
    if (!(d > 0.0))
        r.fail("d_m", "distance must be positive");
    const double nu = r.number("nu");
    if (!(nu > 0.0))
        r.fail("nu", "path loss exponent must be positive");
    const double d_er = r.optional_number("d_er_m").value_or(d);
    if (!(d_er > 0.0))
        r.fail("d_er_m", "distance must be positive");
    base.info_link_gain = path_loss(d, nu);
    // The energy receiver of the separated mode may sit at its own distance on the power link.
    base.power_link_gain = path_loss(run.mode == RunMode::Separated ? d_er : d, nu);

    base.tx_antennas = detail::antenna_key(r, "Nt");
    base.rx_antennas = detail::antenna_key(r, "Nr");

    const bool has_b = cfg.contains("B");
    const bool has_rho = cfg.contains("rho");
    if (has_b && has_rho)
        r.fail("rho", "give either B (feedback bits) or rho (TDD accuracy), not both");
    if (has_b)
    {
        const double b = detail::parse_feedback_value(r.required("B").text, r, "B");
        base.csi = std::isinf(b) ? CsiModel{PerfectCsi{}} : CsiModel{FeedbackBits{static_cast<unsigned>(b)}};
    }
    if (has_rho)
    {
        const double rho = r.number("rho");
        if (!(rho >= 0.0 && rho <= 1.0))
            r.fail("rho", "CSI accuracy must lie in [0, 1]");
        base.csi = TddAccuracy{rho};
    }

    spec.n_trials = r.integer<std::size_t>("n_trials", 10000, 1);
    spec.seed = r.integer<std::uint64_t>("seed", 1, 0);
    spec.solver.grid_points = r.integer<std::size_t>("tau_grid_points", 64, 3);
    run.knob_points = r.integer<std::size_t>("knob_points", 21, 2);

    switch (run.mode)
    {
    case RunMode::RateTradeoff:
    case RunMode::MinPower:
        if (!has_b && !has_rho)
            throw config_error("missing required key (B or rho)", "B");
        spec.objective = Objective::Rate;
        break;
    case RunMode::EeTradeoff:
        if (has_b)
            r.fail("B", "ee_tradeoff uses TDD accuracy rho, not feedback bits");
        if (!has_rho)
            throw config_error("missing required key", "rho");
        spec.objective = Objective::EnergyEfficiency;
        break;
    case RunMode::ReRegion:
    case RunMode::Separated:
        break;
    }

    // Sweep: explicit, or the CSI parameter at its single configured value.
    if (cfg.contains("sweep_param") != cfg.contains("sweep_values"))
        r.fail(cfg.contains("sweep_param") ? "sweep_values" : "sweep_param",
               "sweep_param and sweep_values must be given together");
    if (cfg.contains("sweep_param"))
    {
        if (run.mode != RunMode::RateTradeoff && run.mode != RunMode::EeTradeoff)
            r.fail("sweep_param", "sweeps are only supported by rate_tradeoff and ee_tradeoff");
        spec.sweep.parameter = r.required("sweep_param").text;
        const auto &param = spec.sweep.parameter;
        if (param != "B" && param != "rho" && param != "Nt" && param != "Nr" && param != "P_dbm")
            r.fail("sweep_param", "unsupported sweep parameter `" + param + "` (B, rho, Nt, Nr, P_dbm)");
        for (const std::string &item : r.list("sweep_values"))
        {
            if (spec.sweep.parameter == "B")
                spec.sweep.values.push_back(detail::parse_feedback_value(item, r, "sweep_values"));
            else
            {
                double v = 0.0;
                if (!parse_number(item, v))
                    r.fail("sweep_values", "expected a number, got `" + item + "`");
                spec.sweep.values.push_back(v);
            }
        }
        try
        {
            for (double v : spec.sweep.values)
                apply_sweep(base, spec.objective, spec.sweep.parameter, v);
        }
        catch (const config_error &e)
        {
            const std::string key = e.key() == spec.sweep.parameter ? "sweep_values" : "sweep_param";
            r.fail(key, e.what());
        }
    }
    else if (run.mode == RunMode::RateTradeoff || run.mode == RunMode::MinPower)
    {
        if (has_b)
        {
            const double b = detail::parse_feedback_value(r.required("B").text, r, "B");
            spec.sweep = {"B", {b}};
        }
        else
            spec.sweep = {"rho", {r.number("rho")}};
    }
    else if (run.mode == RunMode::EeTradeoff)
        spec.sweep = {"rho", {r.number("rho")}};

    if (run.mode == RunMode::MinPower)
    {
        run.min_rate = r.number("R_min");
        if (!(run.min_rate > 0.0))
            r.fail("R_min", "rate requirement must be positive");
        run.power_bounds = {dbm_to_watts(r.number("P_lo_dbm")), dbm_to_watts(r.number("P_hi_dbm"))};
        if (!(run.power_bounds.lo < run.power_bounds.hi))
            r.fail("P_hi_dbm", "power bounds must satisfy P_lo_dbm < P_hi_dbm");
    }

    if (run.mode == RunMode::Separated)
    {
        const std::string strategy = cfg.contains("strategy") ? r.required("strategy").text : "both";
        if (strategy == "mrt_mrt")
            run.strategies = {BeamStrategy::MrtMrt};
        else if (strategy == "zf_mrt")
            run.strategies = {BeamStrategy::ZfMrt};
        else if (strategy == "both")
            run.strategies = {BeamStrategy::MrtMrt, BeamStrategy::ZfMrt};
        else
            r.fail("strategy", "expected mrt_mrt, zf_mrt or both, got `" + strategy + "`");
        if (base.tx_antennas < 2 &&
            std::find(run.strategies.begin(), run.strategies.end(), BeamStrategy::ZfMrt) != run.strategies.end())
            r.fail("Nt", "zero-forcing needs at least two transmit antennas");
    }

    try
    {
        base.validate();
    }
    catch (const domain_error &e)
    {
        throw config_error(e.what());
    }
    return run;
}

} // namespace wipt

#endif
