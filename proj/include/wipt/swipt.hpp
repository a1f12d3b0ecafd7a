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
#ifndef WIPT_SWIPT_HPP
#define WIPT_SWIPT_HPP

#include "wipt/channel.hpp"
#include "wipt/error.hpp"
#include "wipt/wpc.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

namespace wipt
{

// One achievable (rate, harvested energy) pair and the protocol knob that produced it.
struct REPoint
{
    double rate = 0.0;   // bits/s/Hz
    double energy = 0.0; // J per slot
    double knob = 0.0;   // time fraction, split ratio or beam-power share, in [0, 1]
};

namespace detail
{
inline void require_knobs(std::span<const double> knobs)
{
    for (double k : knobs)
        require(k >= 0.0 && k <= 1.0, "protocol knob values must lie in [0, 1]");
}

// Receive SNR and the maximum harvestable energy of one MRT slot toward a single combined receiver.
struct CombinedLink
{
    double snr;
    double max_energy;
};

inline CombinedLink combined_link(const ComplexVector &h, const SlotConfig &cfg)
{
    cfg.validate();
    const double received = cfg.tx_power * cfg.power_link_gain * h.squaredNorm();
    return {received / cfg.noise_power, cfg.efficiency * received * cfg.slot_length};
}
} // namespace detail

// Time division at a combined receiver: a fraction f of the slot decodes, the rest harvests.
// MRT serves both phases, so the region is the segment between (R_max, 0) and (0, E_max).
inline std::vector<REPoint> re_region_time_division(const ComplexVector &h, const SlotConfig &cfg,
                                                    std::span<const double> fractions)
{
    detail::require_knobs(fractions);
    const auto link = detail::combined_link(h, cfg);
    const double max_rate = std::log2(1.0 + link.snr);
    std::vector<REPoint> region;
    region.reserve(fractions.size());
    for (double f : fractions)
        region.push_back({f * max_rate, (1.0 - f) * link.max_energy, f});
    return region;
}

// Power splitting: a fraction lambda of the received power goes to the decoder, which sees
// the full receiver noise.
inline std::vector<REPoint> re_region_power_splitting(const ComplexVector &h, const SlotConfig &cfg,
                                                      std::span<const double> splits)
{
    detail::require_knobs(splits);
    const auto link = detail::combined_link(h, cfg);
    std::vector<REPoint> region;
    region.reserve(splits.size());
    for (double lambda : splits)
        region.push_back({std::log2(1.0 + lambda * link.snr), (1.0 - lambda) * link.max_energy, lambda});
    return region;
}

// --- Separated receivers ----------------------------------------------------------------

enum class BeamStrategy
{
    MrtMrt, // information beam matched to the information receiver
    ZfMrt,  // information beam in the null space of the energy receiver's channel
};

struct SecrecyPoint
{
    double rate = 0.0;            // bits/s/Hz at the information receiver
    double secrecy_rate = 0.0;    // bits/s/Hz, energy receiver treated as eavesdropper
    double harvested_power = 0.0; // W at the energy receiver
    double share = 0.0;           // fraction of P on the information beam
};

// Unit information beam for the chosen strategy.
inline ComplexVector information_beam(const ComplexVector &h_ir, const ComplexVector &h_er, BeamStrategy strategy)
{
    detail::require(h_ir.size() == h_er.size(), "receiver channels must share the transmit dimension");
    if (strategy == BeamStrategy::MrtMrt)
        return h_ir.normalized();

    detail::require(h_ir.size() >= 2, "zero-forcing needs at least two transmit antennas");
    const ComplexVector e = h_er.normalized();
    ComplexVector w = h_ir - e * e.dot(h_ir);
    w -= e * e.dot(w); // second pass removes the rounding residue of the first
    const double n = w.norm();
    detail::require(n > 0.0, "information channel is collinear with the energy receiver's channel");
    return w / n;
}

// Sweeps the power share phi on the information beam; 1 - phi goes to an MRT energy beam on h_er.
// The information receiver sits on the information link (info_link_gain), the energy receiver on the
// power link (power_link_gain). The energy waveform is known to the eavesdropper, so only the
// information beam's leakage counts against secrecy.
inline std::vector<SecrecyPoint> separated_two_beam_sweep(const ComplexVector &h_ir, const ComplexVector &h_er,
                                                          const SlotConfig &cfg, std::span<const double> shares,
                                                          BeamStrategy strategy)
{
    cfg.validate();
    detail::require_knobs(shares);
    const ComplexVector w_info = information_beam(h_ir, h_er, strategy);
    const ComplexVector w_energy = h_er.normalized();

    const double ir_gain = beam_gain(h_ir, w_info);
    const double leak_gain = beam_gain(h_er, w_info);
    const double energy_gain = beam_gain(h_er, w_energy);

    std::vector<SecrecyPoint> out;
    out.reserve(shares.size());
    for (double phi : shares)
    {
        const double snr_ir = phi * cfg.tx_power * cfg.info_link_gain * ir_gain / cfg.noise_power;
        const double snr_er = phi * cfg.tx_power * cfg.power_link_gain * leak_gain / cfg.noise_power;
        const double rate = std::log2(1.0 + snr_ir);
        const double secrecy = std::max(0.0, rate - std::log2(1.0 + snr_er));
        const double harvested =
            cfg.efficiency * cfg.power_link_gain * cfg.tx_power * (phi * leak_gain + (1.0 - phi) * energy_gain);
        out.push_back({rate, secrecy, harvested, phi});
    }
    return out;
}

// Evenly spaced knob values 0, 1/(n-1), ..., 1.
inline std::vector<double> unit_grid(std::size_t n)
{
    detail::require(n >= 2, "a knob grid needs at least two points");
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i)
        grid[i] = static_cast<double>(i) / static_cast<double>(n - 1);
    grid.back() = 1.0;
    return grid;
}

} // namespace wipt

#endif
