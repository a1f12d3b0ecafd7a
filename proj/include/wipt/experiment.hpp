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
#ifndef WIPT_EXPERIMENT_HPP
#define WIPT_EXPERIMENT_HPP

#include "wipt/channel.hpp"
#include "wipt/error.hpp"
#include "wipt/format.hpp"
#include "wipt/optimize.hpp"
#include "wipt/stats.hpp"
#include "wipt/wpc.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace wipt
{

enum class Objective
{
    Rate,             // Monte Carlo mean rate, limited feedback or TDD CSI
    EnergyEfficiency, // deterministic large-array pipeline
};

// Sweep value standing for unquantized CSI in a "B" sweep.
inline constexpr double full_feedback = std::numeric_limits<double>::infinity();

// Parameter name plus its values. Recognized names: B, rho, Nt, Nr, P_dbm.
struct Sweep
{
    std::string parameter;
    std::vector<double> values;
};

struct ExperimentSpec
{
    std::string name;
    SlotConfig base_config;
    Objective objective = Objective::Rate;
    Sweep sweep;
    std::size_t n_trials = 10000;
    std::uint64_t seed = 1;
    SolverOptions solver;
};

struct ExperimentRow
{
    double sweep_value = 0.0;
    TradeoffResult tradeoff;
    SummaryStat objective; // metric at tau_star
};

struct ExperimentTable
{
    std::string sweep_parameter;
    std::string metric_name;
    std::vector<ExperimentRow> rows;
};

inline std::string format_sweep_value(const std::string &parameter, double value)
{
    if (parameter == "B" && std::isinf(value))
        return "full";
    return format_number(value);
}

inline std::string metric_name(Objective objective)
{
    return objective == Objective::Rate ? "rate_bpshz" : "ee_bits_per_joule";
}

// CSI accuracy used by the deterministic pipeline; perfect CSI counts as rho = 1.
inline double hardening_accuracy(const CsiModel &csi)
{
    if (std::holds_alternative<PerfectCsi>(csi))
        return 1.0;
    if (const auto *t = std::get_if<TddAccuracy>(&csi))
        return t->rho;
    throw config_error("energy-efficiency experiments need TDD CSI accuracy, not feedback bits", "B");
}

inline Eigen::Index antenna_count(const std::string &parameter, double value)
{
    if (!(value >= 1.0) || value != std::floor(value) || value > 1e6)
        throw config_error("antenna count must be a positive integer, got " + format_number(value), parameter);
    return static_cast<Eigen::Index>(value);
}

// Base configuration with one sweep parameter substituted.
inline SlotConfig apply_sweep(const SlotConfig &base, Objective objective, const std::string &parameter, double value)
{
    SlotConfig cfg = base;
    if (parameter == "B")
    {
        if (objective != Objective::Rate)
            throw config_error("feedback bits can only be swept for rate experiments", parameter);
        if (std::isinf(value) && value > 0)
            cfg.csi = PerfectCsi{};
        else if (value >= 0.0 && value == std::floor(value) && value <= max_feedback_bits)
            cfg.csi = FeedbackBits{static_cast<unsigned>(value)};
        else
            throw config_error("feedback bits must be an integer in [0, " + std::to_string(max_feedback_bits) +
                                   "] or full, got " + format_number(value),
                               parameter);
    }
    else if (parameter == "rho")
    {
        if (!(value >= 0.0 && value <= 1.0))
            throw config_error("CSI accuracy must lie in [0, 1], got " + format_number(value), parameter);
        cfg.csi = TddAccuracy{value};
    }
    else if (parameter == "Nt")
        cfg.tx_antennas = antenna_count(parameter, value);
    else if (parameter == "Nr")
        cfg.rx_antennas = antenna_count(parameter, value);
    else if (parameter == "P_dbm")
    {
        if (!std::isfinite(value))
            throw config_error("transmit power must be finite", parameter);
        cfg.tx_power = dbm_to_watts(value);
    }
    else
        throw config_error("unsupported sweep parameter", parameter);

    try
    {
        cfg.validate();
    }
    catch (const domain_error &e)
    {
        throw config_error(e.what(), parameter);
    }
    return cfg;
}

// Solves the tradeoff for every sweep value. Deterministic given the spec; the result does not
// depend on `threads`.
inline ExperimentTable run(const ExperimentSpec &spec, unsigned threads = 0)
{
    if (spec.n_trials < 1)
        throw config_error("at least one trial is required", "n_trials");
    if (spec.sweep.values.empty())
        throw config_error("sweep has no values", spec.sweep.parameter);

    SolverOptions opt = spec.solver;
    opt.threads = threads;

    ExperimentTable table{spec.sweep.parameter, metric_name(spec.objective), {}};
    for (double value : spec.sweep.values)
    {
        const SlotConfig cfg = apply_sweep(spec.base_config, spec.objective, spec.sweep.parameter, value);
        ExperimentRow row;
        row.sweep_value = value;
        if (spec.objective == Objective::Rate)
        {
            const RateObjective objective(cfg, spec.n_trials, spec.seed, threads);
            row.tradeoff = optimize_tau_rate(objective, opt);
            row.objective = objective.at(row.tradeoff.tau_star);
        }
        else
        {
            row.tradeoff = optimize_tau_ee(cfg, hardening_accuracy(cfg.csi), opt);
            row.objective = exact_stat(row.tradeoff.objective_star);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

// --- Presets -----------------------------------------------------------------------------

namespace presets
{
inline constexpr double slot_length_ms = 5.0;
inline constexpr double noise_dbm = -125.0;
inline constexpr double efficiency = 0.9;
inline constexpr double circuit_power_dbm = 30.0;
inline constexpr double tx_power_dbm = 30.0;
inline constexpr double path_loss_exponent = 4.0;

inline SlotConfig shared_config(double distance_m)
{
    SlotConfig cfg;
    cfg.slot_length = slot_length_ms * 1e-3;
    cfg.tau = 0.0;
    cfg.tx_power = dbm_to_watts(tx_power_dbm);
    cfg.circuit_power = dbm_to_watts(circuit_power_dbm);
    cfg.efficiency = efficiency;
    cfg.noise_power = dbm_to_watts(noise_dbm);
    cfg.power_link_gain = path_loss(distance_m, path_loss_exponent);
    cfg.info_link_gain = path_loss(distance_m, path_loss_exponent);
    return cfg;
}
} // namespace presets

// Traditional array with limited feedback: Nt = Nr = 4, 10 m, B in {0, 2, 4, full}.
inline ExperimentSpec preset_fig5()
{
    ExperimentSpec spec;
    spec.name = "fig5";
    spec.base_config = presets::shared_config(10.0);
    spec.base_config.tx_antennas = 4;
    spec.base_config.rx_antennas = 4;
    spec.base_config.csi = FeedbackBits{0};
    spec.objective = Objective::Rate;
    spec.sweep = {"B", {0.0, 2.0, 4.0, full_feedback}};
    spec.n_trials = 10000;
    spec.seed = 1;
    return spec;
}

// Large arrays with TDD CSI: Nr = 100, rho = 0.9, 50 m, Nt in {50, 100, 200}.
inline ExperimentSpec preset_fig6()
{
    ExperimentSpec spec;
    spec.name = "fig6";
    spec.base_config = presets::shared_config(50.0);
    spec.base_config.tx_antennas = 100;
    spec.base_config.rx_antennas = 100;
    spec.base_config.csi = TddAccuracy{0.9};
    spec.objective = Objective::EnergyEfficiency;
    spec.sweep = {"Nt", {50.0, 100.0, 200.0}};
    spec.n_trials = 1;
    spec.seed = 1;
    return spec;
}

} // namespace wipt

#endif
