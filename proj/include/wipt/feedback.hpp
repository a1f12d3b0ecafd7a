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
#ifndef WIPT_FEEDBACK_HPP
#define WIPT_FEEDBACK_HPP

#include "wipt/channel.hpp"
#include "wipt/error.hpp"
#include "wipt/random.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

namespace wipt
{

// 2^bits unit-norm beamforming vectors shared by transmitter and receiver.
class Codebook
{
public:
    static constexpr double norm_tolerance = 1e-12;

    Codebook(std::vector<ComplexVector> vectors, unsigned bits) : vectors_(std::move(vectors)), bits_(bits)
    {
        detail::require(bits_ <= max_feedback_bits, "feedback bits exceed supported codebook size");
        detail::require(vectors_.size() == (std::size_t{1} << bits_), "codebook must hold exactly 2^B vectors");
        const Eigen::Index dim = vectors_.front().size();
        for (const auto &v : vectors_)
        {
            detail::require(v.size() == dim && dim >= 1, "codewords must share one nonzero dimension");
            detail::require(std::abs(v.norm() - 1.0) <= norm_tolerance, "codewords must have unit norm");
        }
    }

    unsigned bits() const noexcept { return bits_; }
    std::size_t size() const noexcept { return vectors_.size(); }
    Eigen::Index dimension() const noexcept { return vectors_.front().size(); }

    const ComplexVector &operator[](std::size_t i) const { return vectors_[i]; }
    auto begin() const noexcept { return vectors_.begin(); }
    auto end() const noexcept { return vectors_.end(); }

private:
    std::vector<ComplexVector> vectors_;
    unsigned bits_;
};

// Random vector quantization: 2^bits normalized Gaussian draws, isotropic on the unit sphere.
inline Codebook generate_codebook(unsigned bits, Eigen::Index nt, Stream &rng)
{
    detail::require(bits <= max_feedback_bits, "feedback bits exceed supported codebook size");
    detail::require(nt >= 1, "antenna count must be at least 1");
    std::vector<ComplexVector> vectors;
    vectors.reserve(std::size_t{1} << bits);
    for (std::size_t i = 0; i < (std::size_t{1} << bits); ++i)
    {
        ComplexVector v = draw_channel(nt, rng);
        v.normalize();
        vectors.push_back(std::move(v));
    }
    return Codebook(std::move(vectors), bits);
}

struct Quantized
{
    std::size_t index = 0;
    ComplexVector beam;
};

// Codeword maximizing |h^H c|^2; ties go to the lowest index.
inline Quantized quantize(const ComplexVector &h, const Codebook &cb)
{
    detail::require(h.size() == cb.dimension(), "channel and codebook dimensions differ");
    std::size_t best = 0;
    double best_gain = -1.0;
    for (std::size_t i = 0; i < cb.size(); ++i)
    {
        const double g = beam_gain(h, cb[i]);
        if (g > best_gain)
        {
            best_gain = g;
            best = i;
        }
    }
    return {best, cb[best]};
}

// E[|h~^H c|^2] for the RVQ-selected codeword, h~ = h / |h|:
// 1 - 2^B * Beta(2^B, Nt / (Nt - 1)).
inline double rvq_direction_gain(unsigned bits, Eigen::Index nt)
{
    detail::require(bits <= max_feedback_bits, "feedback bits exceed supported codebook size");
    detail::require(nt >= 1, "antenna count must be at least 1");
    if (nt == 1)
        return 1.0;
    if (bits == 0)
        return 1.0 / static_cast<double>(nt);
    const double n = std::ldexp(1.0, static_cast<int>(bits));
    const double x = static_cast<double>(nt) / static_cast<double>(nt - 1);
    const double log_n_beta = bits * std::numbers::ln2 + std::lgamma(n) + std::lgamma(x) - std::lgamma(n + x);
    return 1.0 - std::exp(log_n_beta);
}

// E[|h^H c|^2] = Nt * E[|h~^H c|^2]; the direction statistic is independent of |h|^2, whose mean is Nt.
// Scalar channels have no direction to quantize, so the gain is E|h|^2 = 1.
inline double expected_rvq_gain(unsigned bits, Eigen::Index nt)
{
    detail::require(bits <= max_feedback_bits, "feedback bits exceed supported codebook size");
    detail::require(nt >= 1, "antenna count must be at least 1");
    if (nt == 1 || bits == 0)
        return 1.0;
    return static_cast<double>(nt) * rvq_direction_gain(bits, nt);
}

} // namespace wipt

#endif
