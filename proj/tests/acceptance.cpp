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
// Acceptance checks for the simulator. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include "oracles.hpp"
#include "wipt/cli.hpp"
#include "wipt/wipt.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <unistd.h>
#include <vector>

using namespace wipt;
namespace fs = std::filesystem;

namespace
{
// Gap (R(full) - R(4)) / R(full) on the fig5 preset, measured with the dense grid-scan oracle
// (1000 points, 10^4 trials, seed 1). The solver's value must not regress past this bound.
constexpr double fig5_relative_gap_pinned = 0.0531;
constexpr double fig5_relative_gap_slack = 0.0005;

int failures = 0;

void report(int id, bool pass, const std::string &title, const std::string &detail)
{
    std::printf("[%s] %2d %s: %s\n", pass ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass)
        ++failures;
}

std::string fmt(const char *format, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double combined_se(const SummaryStat &a, const SummaryStat &b)
{
    return std::sqrt(a.std_error * a.std_error + b.std_error * b.std_error);
}

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

struct GridCheck
{
    bool within_step = true;
    double worst = 0.0;
    double step = 0.0;
};

void grid_compare(GridCheck &g, double tau_star, const oracle::GridMax &grid)
{
    const double d = std::abs(tau_star - grid.x);
    g.step = grid.step;
    g.worst = std::max(g.worst, d / grid.step);
    g.within_step = g.within_step && d <= grid.step;
}
} // namespace

int main()
{
    const ExperimentSpec fig5 = preset_fig5();
    const ExperimentSpec fig6 = preset_fig6();

    // 1. Feedback ordering and diminishing returns on the fig5 preset.
    auto start = std::chrono::steady_clock::now();
    const ExperimentTable t5 = run(fig5);
    const double t5_seconds = seconds_since(start);
    {
        const auto &r = t5.rows;
        const SummaryStat &r0 = r[0].objective, &r2 = r[1].objective, &r4 = r[2].objective, &rf = r[3].objective;
        const bool ordered = r2.mean - r0.mean > 2 * combined_se(r0, r2) && r4.mean - r2.mean > 2 * combined_se(r2, r4) &&
                             r4.mean <= rf.mean;
        const bool diminishing = r2.mean - r0.mean > r4.mean - r2.mean;
        report(1, ordered && diminishing && t5_seconds < 60.0, "fig5 rate ordering",
               fmt("R(0)=%.4f R(2)=%.4f R(4)=%.4f R(full)=%.4f; gaps %.4f > %.4f, %.4f > %.4f (2 SE); "
                   "diminishing %.4f > %.4f; %.2f s",
                   r0.mean, r2.mean, r4.mean, rf.mean, r2.mean - r0.mean, 2 * combined_se(r0, r2), r4.mean - r2.mean,
                   2 * combined_se(r2, r4), r2.mean - r0.mean, r4.mean - r2.mean, t5_seconds));
    }

    // Dense grid oracle for criteria 2 and 11.
    GridCheck grid5, grid6;
    double grid_rate_b4 = 0.0, grid_rate_full = 0.0;
    for (std::size_t i = 0; i < fig5.sweep.values.size(); ++i)
    {
        const SlotConfig cfg = apply_sweep(fig5.base_config, fig5.objective, "B", fig5.sweep.values[i]);
        const RateObjective objective(cfg, fig5.n_trials, fig5.seed);
        const TradeoffResult solved = optimize_tau_rate(objective, fig5.solver);
        const auto grid =
            oracle::grid_max([&](double tau) { return objective.at(tau).mean; }, 0.0, cfg.slot_length, 999);
        grid_compare(grid5, solved.tau_star, grid);
        if (i == 2)
            grid_rate_b4 = grid.value;
        if (i == 3)
            grid_rate_full = grid.value;
    }

    // 2. Closeness of four-bit feedback to full CSI.
    {
        const double solver_gap = (t5.rows[3].objective.mean - t5.rows[2].objective.mean) / t5.rows[3].objective.mean;
        const double oracle_gap = (grid_rate_full - grid_rate_b4) / grid_rate_full;
        const bool pass = solver_gap < 0.20 && solver_gap <= fig5_relative_gap_pinned + fig5_relative_gap_slack &&
                          std::abs(solver_gap - oracle_gap) <= fig5_relative_gap_slack;
        report(2, pass, "fig5 gap to full feedback",
               fmt("solver %.5f, grid oracle %.5f, pinned %.4f, bound 0.20", solver_gap, oracle_gap,
                   fig5_relative_gap_pinned));
    }

    // 3. Energy efficiency grows with the array size.
    start = std::chrono::steady_clock::now();
    const ExperimentTable t6 = run(fig6);
    const double t6_seconds = seconds_since(start);
    {
        const auto &r = t6.rows;
        const bool increasing = r[0].objective.mean < r[1].objective.mean && r[1].objective.mean < r[2].objective.mean;
        report(3, increasing && t6_seconds < 1.0, "fig6 energy efficiency ordering",
               fmt("EE(50)=%.6g EE(100)=%.6g EE(200)=%.6g bits/J; %.4f s", r[0].objective.mean, r[1].objective.mean,
                   r[2].objective.mean, t6_seconds));
    }

    // 4. Interior switching point.
    {
        bool pass = true;
        double lo = 1.0, hi = 0.0;
        for (const ExperimentTable *t : {&t5, &t6})
            for (const auto &row : t->rows)
            {
                const double frac = row.tradeoff.tau_star / fig5.base_config.slot_length;
                lo = std::min(lo, frac);
                hi = std::max(hi, frac);
                pass = pass && frac > 0.01 && frac < 0.99;
            }
        report(4, pass, "interior optimum", fmt("tau*/T in [%.4f, %.4f], required (0.01, 0.99)", lo, hi));
    }

    // 5. RVQ direction gain against 1 - 2^B Beta(2^B, Nt/(Nt-1)).
    {
        constexpr std::size_t trials = 1000000;
        bool pass = true;
        double worst = 0.0;
        std::vector<double> gain(trials);
        for (int nt : {2, 4})
            for (unsigned bits = 0; bits <= 6; ++bits)
            {
                parallel_for(trials, 0, [&](std::size_t t) {
                    Stream ch(2024, t, Lane::PowerChannel), cb(2024, t, Lane::Codebook);
                    const ComplexVector h = draw_channel(nt, ch);
                    const Quantized q = quantize(h, generate_codebook(bits, nt, cb));
                    gain[t] = std::norm(h.normalized().dot(q.beam));
                });
                CompensatedSum sum;
                for (double g : gain)
                    sum.add(g);
                const double n = std::ldexp(1.0, static_cast<int>(bits));
                const double expected = 1.0 - n * std::beta(n, nt / (nt - 1.0));
                const double rel = std::abs(sum.value() / trials - expected) / expected;
                worst = std::max(worst, rel);
                pass = pass && rel <= 0.01;
            }
        report(5, pass, "RVQ oracle", fmt("worst relative error %.5f over B=0..6, Nt={2,4}, 1e6 trials", worst));
    }

    // 6. Channel hardening of the harvested power.
    {
        constexpr std::size_t trials = 200000;
        SlotConfig cfg = fig6.base_config;
        cfg.tx_antennas = 100;
        cfg.rx_antennas = 1;
        bool pass = true;
        std::string detail;
        for (double rho : {0.0, 0.5, 0.9, 1.0})
        {
            cfg.csi = TddAccuracy{rho};
            const auto gains = draw_trials(cfg, trials, 6);
            CompensatedSum sum;
            for (const auto &g : gains)
                sum.add(cfg.efficiency * cfg.tx_power * cfg.power_link_gain * g.beam_gain);
            const double sampled = sum.value() / trials;
            const double hardened =
                lsmimo_harvested_power(cfg.tx_power, cfg.power_link_gain, cfg.efficiency, cfg.tx_antennas, rho);
            const double rel = std::abs(sampled - hardened) / hardened;
            pass = pass && rel <= 0.01;
            detail += fmt("rho=%.1f err %.5f; ", rho, rel);
        }
        report(6, pass, "hardening oracle", detail + "Nt=100, 2e5 trials");
    }

    // 7. Harvested energy never exceeds the full-alignment bound.
    {
        constexpr std::size_t slots = 100000;
        const SlotConfig cfg = fig5.base_config;
        const std::vector<CsiModel> models = {PerfectCsi{},       FeedbackBits{0},     FeedbackBits{3},
                                              FeedbackBits{6},    TddAccuracy{0.0},    TddAccuracy{0.5},
                                              TddAccuracy{0.9},   TddAccuracy{1.0}};
        std::size_t violations = 0;
        for (std::size_t t = 0; t < slots; ++t)
        {
            Stream ch(7, t, Lane::PowerChannel), aux(7, t, Lane::Auxiliary);
            const ComplexVector h = draw_channel(cfg.tx_antennas, ch);
            const ComplexVector w = transmit_beam(h, models[t % models.size()], 7, t);
            const double tau = aux.uniform() * cfg.slot_length;
            const double e =
                harvested_energy(cfg.tx_power, tau, cfg.power_link_gain, cfg.efficiency, beam_gain(h, w));
            const double bound = cfg.efficiency * cfg.tx_power * cfg.power_link_gain * h.squaredNorm() * tau;
            if (e > bound * (1.0 + 1e-12))
                ++violations;
        }
        report(7, violations == 0, "energy conservation", fmt("%zu violations in %zu slots", violations, slots));
    }

    // 8. Power splitting dominates time division.
    {
        const SlotConfig cfg = fig5.base_config;
        const std::vector<double> knobs = unit_grid(101);
        std::size_t bad = 0;
        for (std::size_t t = 0; t < 1000; ++t)
        {
            Stream ch(8, t, Lane::PowerChannel);
            const ComplexVector h = draw_channel(cfg.tx_antennas, ch);
            const auto td = re_region_time_division(h, cfg, knobs);
            const auto ps = re_region_power_splitting(h, cfg, knobs);
            const auto close = [](double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(std::abs(a), std::abs(b)); };
            bool ok = close(td.front().energy, ps.front().energy) && close(td.front().rate, ps.front().rate) &&
                      close(td.back().energy, ps.back().energy) && close(td.back().rate, ps.back().rate);
            for (std::size_t i = 0; i < knobs.size(); ++i)
                ok = ok && close(td[i].energy, ps[i].energy) && ps[i].rate >= td[i].rate * (1.0 - 1e-9);
            bad += ok ? 0 : 1;
        }
        report(8, bad == 0, "SWIPT dominance", fmt("%zu of 1000 realizations violate", bad));
    }

    // 9. Zero-forcing leakage.
    {
        double worst = 0.0;
        for (std::size_t t = 0; t < 1000; ++t)
        {
            Stream ir(9, t, Lane::InfoChannel), er(9, t, Lane::EavesdropperChannel);
            const ComplexVector h_ir = draw_channel(4, ir), h_er = draw_channel(4, er);
            const ComplexVector w = information_beam(h_ir, h_er, BeamStrategy::ZfMrt);
            worst = std::max(worst, std::norm(h_er.dot(w)) / h_er.squaredNorm());
        }
        report(9, worst <= 1e-20, "zero-forcing leakage", fmt("worst normalized leakage %.3g, bound 1e-20", worst));
    }

    // 10. Byte-identical preset output.
    {
        const fs::path dir = fs::temp_directory_path() / ("wipt_acceptance_" + std::to_string(::getpid()));
        fs::create_directories(dir);
        std::vector<std::string> outputs;
        bool ran = true;
        for (auto [name, threads] : {std::pair{"a", 1u}, std::pair{"b", 1u}, std::pair{"c", 4u}})
        {
            cli::CommonFlags flags;
            flags.seed = 11;
            flags.threads = threads;
            const fs::path out = dir / (std::string(name) + ".csv");
            ran = ran && cli::cmd_preset("fig5", {}, out, flags, std::cerr) == cli::ok;
            outputs.push_back(slurp(out) + slurp(dir / (std::string(name) + ".summary.csv")));
        }
        fs::remove_all(dir);
        const bool same = ran && outputs[0] == outputs[1] && outputs[0] == outputs[2] && !outputs[0].empty();
        report(10, same, "determinism",
               fmt("fig5 seed 11: repeat %s, 1 vs 4 threads %s", outputs[0] == outputs[1] ? "identical" : "differs",
                   outputs[0] == outputs[2] ? "identical" : "differs"));
    }

    // 11. Solver against a dense grid scan.
    for (double nt : fig6.sweep.values)
    {
        const SlotConfig cfg = apply_sweep(fig6.base_config, fig6.objective, "Nt", nt);
        const double rho = hardening_accuracy(cfg.csi);
        const TradeoffResult solved = optimize_tau_ee(cfg, rho, fig6.solver);
        const auto grid = oracle::grid_max([&](double tau) { return lsmimo_energy_efficiency(cfg, rho, tau); }, 0.0,
                                           cfg.slot_length, 999);
        grid_compare(grid6, solved.tau_star, grid);
    }
    report(11, grid5.within_step && grid6.within_step, "solver vs grid",
           fmt("worst |tau* - tau_grid| = %.3f steps (fig5), %.3f steps (fig6), 1000-point grid", grid5.worst,
               grid6.worst));

    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
