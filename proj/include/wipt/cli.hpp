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
#ifndef WIPT_CLI_HPP
#define WIPT_CLI_HPP

#include "wipt/channel.hpp"
#include "wipt/config.hpp"
#include "wipt/csv.hpp"
#include "wipt/error.hpp"
#include "wipt/experiment.hpp"
#include "wipt/optimize.hpp"
#include "wipt/parallel.hpp"
#include "wipt/stats.hpp"
#include "wipt/swipt.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace wipt::cli
{

enum ExitCode : int
{
    ok = 0,
    config_failure = 2,
    io_failure = 3,
};

// Flags shared by every subcommand; seed and trials override the configuration.
struct CommonFlags
{
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    unsigned threads = 0;
};

struct Outputs
{
    std::string main_csv;
    std::optional<std::string> summary_csv;
};

// Files written next to `out`: out itself, <stem>.summary.csv and <stem>.config.
struct OutputPaths
{
    std::filesystem::path main;
    std::filesystem::path summary;
    std::filesystem::path config_echo;

    explicit OutputPaths(const std::filesystem::path &out) : main(out)
    {
        std::filesystem::path base = out;
        base.replace_extension();
        summary = base;
        summary += ".summary.csv";
        config_echo = base;
        config_echo += ".config";
    }
};

namespace detail
{
inline Outputs run_tradeoff(const ResolvedRun &run, unsigned threads)
{
    const ExperimentTable table = wipt::run(run.experiment, threads);
    return {csv::curve(table), csv::summary(table)};
}

inline Outputs run_re_region(const ResolvedRun &run, unsigned threads)
{
    const ExperimentSpec &spec = run.experiment;
    const std::vector<double> knobs = unit_grid(run.knob_points);
    const std::size_t k = knobs.size();

    std::vector<std::vector<REPoint>> td(spec.n_trials), ps(spec.n_trials);
    parallel_for(spec.n_trials, threads, [&](std::size_t trial) {
        Stream rng(spec.seed, trial, Lane::PowerChannel);
        const ComplexVector h = draw_channel(spec.base_config.tx_antennas, rng);
        td[trial] = re_region_time_division(h, spec.base_config, knobs);
        ps[trial] = re_region_power_splitting(h, spec.base_config, knobs);
    });

    std::vector<csv::MeanREPoint> points;
    for (const auto &[name, regions] : {std::pair{"time_division", &td}, std::pair{"power_splitting", &ps}})
    {
        for (std::size_t j = 0; j < k; ++j)
        {
            CompensatedSum rate, energy;
            for (const auto &region : *regions)
            {
                rate.add(region[j].rate);
                energy.add(region[j].energy);
            }
            const double n = static_cast<double>(spec.n_trials);
            points.push_back({name, knobs[j], rate.value() / n, energy.value() / n});
        }
    }
    return {csv::re_region(points), std::nullopt};
}

inline Outputs run_separated(const ResolvedRun &run, unsigned threads)
{
    const ExperimentSpec &spec = run.experiment;
    const std::vector<double> shares = unit_grid(run.knob_points);

    std::vector<csv::MeanSecrecyPoint> points;
    for (BeamStrategy strategy : run.strategies)
    {
        std::vector<std::vector<SecrecyPoint>> sweeps(spec.n_trials);
        parallel_for(spec.n_trials, threads, [&](std::size_t trial) {
            Stream ir_rng(spec.seed, trial, Lane::InfoChannel);
            Stream er_rng(spec.seed, trial, Lane::PowerChannel);
            const ComplexVector h_ir = draw_channel(spec.base_config.tx_antennas, ir_rng);
            const ComplexVector h_er = draw_channel(spec.base_config.tx_antennas, er_rng);
            sweeps[trial] = separated_two_beam_sweep(h_ir, h_er, spec.base_config, shares, strategy);
        });
        const std::string name = strategy == BeamStrategy::MrtMrt ? "mrt_mrt" : "zf_mrt";
        const double n = static_cast<double>(spec.n_trials);
        for (std::size_t j = 0; j < shares.size(); ++j)
        {
            CompensatedSum rate, secrecy, harvested;
            for (const auto &s : sweeps)
            {
                rate.add(s[j].rate);
                secrecy.add(s[j].secrecy_rate);
                harvested.add(s[j].harvested_power);
            }
            points.push_back({name, {rate.value() / n, secrecy.value() / n, harvested.value() / n, shares[j]}});
        }
    }
    return {csv::separated(points), std::nullopt};
}

inline Outputs run_min_power(const ResolvedRun &run, unsigned threads)
{
    const ExperimentSpec &spec = run.experiment;
    const RateObjective objective(spec.base_config, spec.n_trials, spec.seed, threads);
    SolverOptions opt = spec.solver;
    opt.threads = threads;
    const PowerSolution sol = min_power_subject_to_rate(objective, run.min_rate, run.power_bounds, opt);
    const SummaryStat at_star = objective.at(sol.tradeoff.tau_star, sol.tx_power);
    return {csv::min_power(run.min_rate, sol, at_star), std::nullopt};
}
} // namespace detail

// Executes a resolved configuration and renders its CSV output(s).
inline Outputs execute(const ResolvedRun &run, unsigned threads = 0)
{
    switch (run.mode)
    {
    case RunMode::RateTradeoff:
    case RunMode::EeTradeoff:
        return detail::run_tradeoff(run, threads);
    case RunMode::ReRegion:
        return detail::run_re_region(run, threads);
    case RunMode::Separated:
        return detail::run_separated(run, threads);
    case RunMode::MinPower:
        return detail::run_min_power(run, threads);
    }
    throw config_error("unhandled mode", "mode");
}

inline void write_file(const std::filesystem::path &path, const std::string &contents)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw io_error("cannot open `" + path.string() + "` for writing");
    out << contents;
    out.flush();
    if (!out)
        throw io_error("failed writing `" + path.string() + "`");
}

inline void apply_flags(RunConfig &cfg, const CommonFlags &flags)
{
    if (flags.seed)
        cfg.set("seed", std::to_string(*flags.seed));
    if (flags.trials)
        cfg.set("n_trials", std::to_string(*flags.trials));
}

namespace detail
{
template <typename Body>
int guarded(std::ostream &err, Body &&body)
{
    try
    {
        body();
        return ok;
    }
    catch (const config_error &e)
    {
        err << "config error: " << e.what() << '\n';
        return config_failure;
    }
    catch (const domain_error &e)
    {
        err << "config error: " << e.what() << '\n';
        return config_failure;
    }
    catch (const io_error &e)
    {
        err << "I/O error: " << e.what() << '\n';
        return io_failure;
    }
}

inline void run_and_write(const RunConfig &cfg, const std::filesystem::path &out, unsigned threads, bool echo)
{
    const ResolvedRun run = resolve(cfg);
    const Outputs outputs = execute(run, threads);
    const OutputPaths paths(out);
    write_file(paths.main, outputs.main_csv);
    if (outputs.summary_csv)
        write_file(paths.summary, *outputs.summary_csv);
    if (echo)
        write_file(paths.config_echo, cfg.echo());
}
} // namespace detail

// `preset <fig5|fig6> [--set key=value ...] --out <path>`
inline int cmd_preset(const std::string &name, const std::vector<std::string> &overrides,
                      const std::filesystem::path &out, const CommonFlags &flags, std::ostream &err)
{
    return detail::guarded(err, [&] {
        RunConfig cfg = preset_run_config(name);
        for (const auto &o : overrides)
            cfg.apply_override(o);
        apply_flags(cfg, flags);
        detail::run_and_write(cfg, out, flags.threads, true);
    });
}

// `run --config <path> --out <path>`
inline int cmd_run(const std::filesystem::path &config_path, const std::filesystem::path &out,
                   const CommonFlags &flags, std::ostream &err)
{
    return detail::guarded(err, [&] {
        std::ifstream in(config_path);
        if (!in)
            throw io_error("cannot read config file `" + config_path.string() + "`");
        RunConfig cfg = RunConfig::parse(in);
        apply_flags(cfg, flags);
        detail::run_and_write(cfg, out, flags.threads, false);
    });
}

} // namespace wipt::cli

#endif
