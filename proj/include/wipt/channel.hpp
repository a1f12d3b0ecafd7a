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
#ifndef WIPT_CHANNEL_HPP
#define WIPT_CHANNEL_HPP

#include "wipt/error.hpp"
#include "wipt/format.hpp"
#include "wipt/random.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>
#include <variant>

namespace wipt
{

// Complex channel or beam vector. h denotes the power link (Nt entries), g the
// information link (Nr entries).
using ComplexVector = Eigen::VectorXcd;

// Power gain of a link: reference_gain * d^(-exponent).
struct PathLossModel
{
    double reference_gain = 1e-2; // 20 dB loss at 1 m
    double exponent = 4.0;

    double gain(double distance_m) const
    {
        detail::require(reference_gain > 0.0, "path loss reference gain must be positive");
        detail::require(exponent > 0.0, "path loss exponent must be positive");
        detail::require(distance_m > 0.0 && std::isfinite(distance_m), "distance must be positive");
        return reference_gain * std::pow(distance_m, -exponent);
    }
};

inline double path_loss(double distance_m, double exponent)
{
    return PathLossModel{1e-2, exponent}.gain(distance_m);
}

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

// --- CSI availability at the power transmitter ---------------------------------------

// Exact channel known: beam is MRT on the true channel.
struct PerfectCsi
{
    bool operator==(const PerfectCsi &) const = default;
};

// Channel direction quantized with a 2^bits RVQ codebook (FDD limited feedback).
struct FeedbackBits
{
    unsigned bits = 0;
    bool operator==(const FeedbackBits &) const = default;
};

// Channel estimated through reciprocity with accuracy rho in [0, 1] (TDD).
struct TddAccuracy
{
    double rho = 1.0;
    bool operator==(const TddAccuracy &) const = default;
};

using CsiModel = std::variant<PerfectCsi, FeedbackBits, TddAccuracy>;

inline constexpr unsigned max_feedback_bits = 20;

inline void validate(const CsiModel &csi)
{
    if (const auto *fb = std::get_if<FeedbackBits>(&csi))
        detail::require(fb->bits <= max_feedback_bits, "feedback bits exceed supported codebook size");
    if (const auto *tdd = std::get_if<TddAccuracy>(&csi))
        detail::require(tdd->rho >= 0.0 && tdd->rho <= 1.0, "CSI accuracy rho must lie in [0, 1]");
}

inline std::string describe(const CsiModel &csi)
{
    struct Visitor
    {
        std::string operator()(const PerfectCsi &) const { return "full"; }
        std::string operator()(const FeedbackBits &f) const { return "B=" + std::to_string(f.bits); }
        std::string operator()(const TddAccuracy &t) const { return "rho=" + format_number(t.rho); }
    };
    return std::visit(Visitor{}, csi);
}

// --- Channel realizations -------------------------------------------------------------

// i.i.d. CN(0, 1) entries (Rayleigh fading).
inline ComplexVector draw_channel(Eigen::Index n, Stream &rng)
{
    detail::require(n >= 1, "channel dimension must be at least 1");
    ComplexVector h(n);
    for (Eigen::Index i = 0; i < n; ++i)
        h[i] = rng.complex_normal();
    return h;
}

// Gauss-Markov estimate: rho * h + sqrt(1 - rho^2) * e with e an independent CN(0, I) draw.
// Keeps the marginal statistics of h for every rho.
inline ComplexVector apply_csi_error(const ComplexVector &h, double rho, Stream &rng)
{
    detail::require(rho >= 0.0 && rho <= 1.0, "CSI accuracy rho must lie in [0, 1]");
    detail::require(h.size() >= 1, "channel dimension must be at least 1");
    if (rho == 1.0)
        return h;
    const ComplexVector e = draw_channel(h.size(), rng);
    return rho * h + std::sqrt(1.0 - rho * rho) * e;
}

// |a^H b|^2
inline double beam_gain(const ComplexVector &channel, const ComplexVector &beam)
{
    return std::norm(channel.dot(beam)); // Eigen's dot conjugates the first argument
}

} // namespace wipt

#endif
