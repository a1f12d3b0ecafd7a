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
#ifndef WIPT_WPC_HPP
#define WIPT_WPC_HPP

#include "wipt/channel.hpp"
#include "wipt/error.hpp"
#include "wipt/feedback.hpp"
#include "wipt/parallel.hpp"
#include "wipt/random.hpp"
#include "wipt/stats.hpp"

#include <cmath>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace wipt
{

// Wireless-powered communication slot: the power transmitter beams energy for `tau`
// seconds, then the single-antenna device spends the harvested energy sending data to
// an Nr-antenna receiver (MRC) for the remaining slot_length - tau seconds.
// Rates are per unit bandwidth (bits/s/Hz).
struct SlotConfig
{
    double slot_length = 5e-3;         // T, seconds
    double tau = 0.0;                  // power-transfer duration, seconds
    double tx_power = 1.0;             // P, Watts
    double circuit_power = 1.0;        // P0, Watts
    double efficiency = 0.9;           // RF-to-DC conversion, (0, 1]
    double noise_power = 3.162e-16;    // sigma^2, Watts
    double power_link_gain = 1e-6;     // alpha
    double info_link_gain = 1e-6;      // beta
    Eigen::Index tx_antennas = 4;      // Nt
    Eigen::Index rx_antennas = 4;      // Nr
    CsiModel csi = PerfectCsi{};

    void validate() const
    {
        detail::require(slot_length > 0.0 && std::isfinite(slot_length), "slot length must be positive");
        detail::require(tau >= 0.0 && tau < slot_length, "transfer duration must satisfy 0 <= tau < T");
        detail::require(tx_power > 0.0, "transmit power must be positive");
        detail::require(circuit_power >= 0.0, "circuit power must be nonnegative");
        detail::require(efficiency > 0.0 && efficiency <= 1.0, "conversion efficiency must lie in (0, 1]");
        detail::require(noise_power > 0.0, "noise power must be positive");
        detail::require(power_link_gain > 0.0 && info_link_gain > 0.0, "path gains must be positive");
        detail::require(tx_antennas >= 1 && rx_antennas >= 1, "antenna counts must be at least 1");
        wipt::validate(csi);
    }
};

struct SlotOutcome
{
    double harvested_energy = 0.0; // J
    double avg_tx_power = 0.0;     // W
    double bits = 0.0;             // bits/Hz delivered in the slot
    double avg_rate = 0.0;         // bits/s/Hz
    double energy_consumed = 0.0;  // J, PA plus circuit
};

struct CurvePoint
{
    double tau = 0.0;
    double objective = 0.0;
    double std_error = 0.0;
};

// --- Slot pipeline ---------------------------------------------------------------------

// Linear harvester: efficiency * P * link_gain * |h^H w|^2 * duration.
inline double harvested_energy(double tx_power, double duration, double link_gain, double efficiency, double beam_gain)
{
    detail::require(tx_power >= 0.0 && duration >= 0.0 && link_gain >= 0.0 && efficiency >= 0.0 && beam_gain >= 0.0,
                    "harvested_energy arguments must be nonnegative");
    return efficiency * tx_power * link_gain * beam_gain * duration;
}

// Harvested energy spread over the information phase.
inline double avg_tx_power(double energy, double slot_length, double tau)
{
    detail::require(tau < slot_length, "no information phase: tau must be below the slot length");
    detail::require(energy >= 0.0 && tau >= 0.0, "energy and tau must be nonnegative");
    return energy / (slot_length - tau);
}

// Shannon information over the information phase, bits per Hz.
inline double slot_information(double tx_power, double link_gain, double channel_gain, double noise_power,
                               double slot_length, double tau)
{
    detail::require(tau < slot_length, "no information phase: tau must be below the slot length");
    detail::require(tx_power >= 0.0 && link_gain >= 0.0 && channel_gain >= 0.0, "power and gains must be nonnegative");
    detail::require(noise_power > 0.0, "noise power must be positive");
    return (slot_length - tau) * std::log2(1.0 + tx_power * link_gain * channel_gain / noise_power);
}

// Whole slot from scalar channel gains: |h^H w|^2 on the power link, |g|^2 (MRC) on the info link.
inline SlotOutcome simulate_slot(const SlotConfig &cfg, double tau, double tx_power, double beam_gain, double info_gain)
{
    SlotOutcome out;
    out.harvested_energy = harvested_energy(tx_power, tau, cfg.power_link_gain, cfg.efficiency, beam_gain);
    out.avg_tx_power = avg_tx_power(out.harvested_energy, cfg.slot_length, tau);
    out.bits = slot_information(out.avg_tx_power, cfg.info_link_gain, info_gain, cfg.noise_power, cfg.slot_length, tau);
    out.avg_rate = out.bits / cfg.slot_length;
    out.energy_consumed = tx_power * tau + cfg.circuit_power * cfg.slot_length;
    return out;
}

// Average rate of one realization at cfg.tau.
inline double avg_rate_for_slot(const SlotConfig &cfg, const ComplexVector &h, const ComplexVector &g,
                                const ComplexVector &beam)
{
    cfg.validate();
    detail::require(h.size() == beam.size(), "beam and power channel dimensions differ");
    detail::require(std::abs(beam.norm() - 1.0) <= 1e-9, "beam must have unit norm");
    return simulate_slot(cfg, cfg.tau, cfg.tx_power, beam_gain(h, beam), g.squaredNorm()).avg_rate;
}

// --- Monte Carlo over channel realizations ---------------------------------------------

// Energy beam for the power channel h under the given CSI model. Randomness for the codebook
// and the estimation error comes from the trial's own lanes.
inline ComplexVector transmit_beam(const ComplexVector &h, const CsiModel &csi, std::uint64_t seed, std::uint64_t trial)
{
    struct Visitor
    {
        const ComplexVector &h;
        std::uint64_t seed;
        std::uint64_t trial;

        ComplexVector operator()(const PerfectCsi &) const { return h.normalized(); }
        ComplexVector operator()(const FeedbackBits &f) const
        {
            Stream rng(seed, trial, Lane::Codebook);
            return quantize(h, generate_codebook(f.bits, h.size(), rng)).beam;
        }
        ComplexVector operator()(const TddAccuracy &t) const
        {
            Stream rng(seed, trial, Lane::CsiError);
            return apply_csi_error(h, t.rho, rng).normalized();
        }
    };
    return std::visit(Visitor{h, seed, trial}, csi);
}

// Channel-dependent scalars of one trial. Everything else in the slot is deterministic.
struct TrialGains
{
    double beam_gain = 0.0;          // |h^H w|^2
    double info_gain = 0.0;          // |g|^2
    double power_channel_norm2 = 0.0; // |h|^2, upper bound of beam_gain
};

inline TrialGains draw_trial(const SlotConfig &cfg, std::uint64_t seed, std::uint64_t trial)
{
    Stream power_rng(seed, trial, Lane::PowerChannel);
    Stream info_rng(seed, trial, Lane::InfoChannel);
    const ComplexVector h = draw_channel(cfg.tx_antennas, power_rng);
    const ComplexVector g = draw_channel(cfg.rx_antennas, info_rng);
    const ComplexVector w = transmit_beam(h, cfg.csi, seed, trial);
    return {beam_gain(h, w), g.squaredNorm(), h.squaredNorm()};
}

inline std::vector<TrialGains> draw_trials(const SlotConfig &cfg, std::size_t n_trials, std::uint64_t seed,
                                           unsigned threads = 0)
{
    std::vector<TrialGains> out(n_trials);
    parallel_for(n_trials, threads, [&](std::size_t i) { out[i] = draw_trial(cfg, seed, i); });
    return out;
}

// Monte Carlo mean rate as a deterministic function of (tau, P): the realizations are drawn
// once and reused for every evaluation (common random numbers).
class RateObjective
{
public:
    RateObjective(const SlotConfig &cfg, std::size_t n_trials, std::uint64_t seed, unsigned threads = 0)
        : cfg_(cfg)
    {
        cfg_.validate();
        detail::require(n_trials >= 1, "at least one trial is required");
        trials_ = draw_trials(cfg_, n_trials, seed, threads);
    }

    const SlotConfig &config() const noexcept { return cfg_; }
    std::span<const TrialGains> trials() const noexcept { return trials_; }

    // Rate of one trial; tau >= T is the no-information-phase limit, rate 0.
    double trial_rate(const TrialGains &t, double tau, double tx_power) const
    {
        if (tau >= cfg_.slot_length)
            return 0.0;
        return simulate_slot(cfg_, tau, tx_power, t.beam_gain, t.info_gain).avg_rate;
    }

    SummaryStat at(double tau) const { return at(tau, cfg_.tx_power); }

    SummaryStat at(double tau, double tx_power) const
    {
        detail::require(tau >= 0.0, "tau must be nonnegative");
        std::vector<double> rates(trials_.size());
        for (std::size_t i = 0; i < trials_.size(); ++i)
            rates[i] = trial_rate(trials_[i], tau, tx_power);
        return summarize(rates);
    }

private:
    SlotConfig cfg_;
    std::vector<TrialGains> trials_;
};

inline std::vector<CurvePoint> mean_rate_curve(const SlotConfig &cfg, const CsiModel &csi,
                                               std::span<const double> tau_grid, std::size_t n_trials,
                                               std::uint64_t seed, unsigned threads = 0)
{
    detail::require(!tau_grid.empty(), "tau grid must not be empty");
    for (double tau : tau_grid)
        detail::require(tau >= 0.0 && tau < cfg.slot_length, "tau grid must lie within [0, T)");
    SlotConfig c = cfg;
    c.csi = csi;
    const RateObjective objective(c, n_trials, seed, threads);
    std::vector<CurvePoint> curve;
    curve.reserve(tau_grid.size());
    for (double tau : tau_grid)
    {
        const SummaryStat s = objective.at(tau);
        curve.push_back({tau, s.mean, s.std_error});
    }
    return curve;
}

// --- Large-array (channel hardening) pipeline ------------------------------------------

// Harvested power with MRT on a TDD estimate of accuracy rho: the beamforming gain
// concentrates at rho^2 * Nt + (1 - rho^2).
inline double lsmimo_harvested_power(double tx_power, double link_gain, double efficiency, Eigen::Index nt, double rho)
{
    detail::require(nt >= 1, "antenna count must be at least 1");
    detail::require(rho >= 0.0 && rho <= 1.0, "CSI accuracy rho must lie in [0, 1]");
    detail::require(tx_power >= 0.0 && link_gain >= 0.0 && efficiency >= 0.0, "arguments must be nonnegative");
    const double r2 = rho * rho;
    return efficiency * tx_power * link_gain * (r2 * static_cast<double>(nt) + (1.0 - r2));
}

// Rate with |g|^2 replaced by its mean Nr.
inline double lsmimo_rate(double tx_power, double link_gain, Eigen::Index nr, double noise_power)
{
    detail::require(nr >= 1, "antenna count must be at least 1");
    detail::require(noise_power > 0.0, "noise power must be positive");
    detail::require(tx_power >= 0.0 && link_gain >= 0.0, "arguments must be nonnegative");
    return std::log2(1.0 + tx_power * link_gain * static_cast<double>(nr) / noise_power);
}

// Bits per Joule: PA energy P * tau plus circuit power drawn for the whole slot.
inline double energy_efficiency(const SlotConfig &cfg, double bits_per_slot)
{
    detail::require(bits_per_slot >= 0.0, "bits must be nonnegative");
    const double consumed = cfg.tx_power * cfg.tau + cfg.circuit_power * cfg.slot_length;
    detail::require(consumed > 0.0, "consumed energy must be positive");
    return bits_per_slot / consumed;
}

// Deterministic energy efficiency of a slot with switching point tau, CSI accuracy rho.
// tau >= T is the no-information-phase limit, value 0.
inline double lsmimo_energy_efficiency(const SlotConfig &cfg, double rho, double tau)
{
    detail::require(tau >= 0.0, "tau must be nonnegative");
    if (tau >= cfg.slot_length)
        return 0.0;
    const double harvested =
        lsmimo_harvested_power(cfg.tx_power, cfg.power_link_gain, cfg.efficiency, cfg.tx_antennas, rho) * tau;
    const double p = avg_tx_power(harvested, cfg.slot_length, tau);
    const double bits = (cfg.slot_length - tau) * lsmimo_rate(p, cfg.info_link_gain, cfg.rx_antennas, cfg.noise_power);
    SlotConfig at_tau = cfg;
    at_tau.tau = tau;
    return energy_efficiency(at_tau, bits);
}

} // namespace wipt

#endif
