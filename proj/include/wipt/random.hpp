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
#ifndef WIPT_RANDOM_HPP
#define WIPT_RANDOM_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>

namespace wipt
{

// Independent purposes a single trial draws randomness for. Each lane is its own substream,
// so changing how much one lane consumes never shifts the draws of another.
enum class Lane : std::uint64_t
{
    PowerChannel = 1,
    InfoChannel = 2,
    Codebook = 3,
    CsiError = 4,
    EavesdropperChannel = 5,
    Auxiliary = 6,
};

inline constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-based generator: the i-th output is a bijective mix of (key + i * golden gamma),
// the SplitMix64 construction. The key is derived from (seed, trial, lane), so any trial's
// stream can be reconstructed without touching the others.
//
// Satisfies UniformRandomBitGenerator. Gaussian sampling is done in-house (Box-Muller) rather
// than through std::normal_distribution, whose output is implementation-defined.
class Stream
{
public:
    using result_type = std::uint64_t;

    static constexpr std::uint64_t gamma = 0x9e3779b97f4a7c15ULL;

    constexpr Stream(std::uint64_t seed, std::uint64_t trial, Lane lane) noexcept
        : key_(derive_key(seed, trial, static_cast<std::uint64_t>(lane))) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    constexpr result_type operator()() noexcept
    {
        ++counter_;
        return splitmix64_mix(key_ + counter_ * gamma);
    }

    // Uniform on [0, 1) with 53 bits of resolution.
    double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    // Circularly-symmetric complex Gaussian with unit variance, E|z|^2 = 1.
    std::complex<double> complex_normal() noexcept
    {
        const double u1 = 1.0 - uniform(); // (0, 1]
        const double u2 = uniform();
        const double r = std::sqrt(-std::log(u1));
        const double phase = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(phase), r * std::sin(phase)};
    }

    constexpr std::uint64_t counter() const noexcept { return counter_; }

private:
    static constexpr std::uint64_t derive_key(std::uint64_t seed, std::uint64_t trial, std::uint64_t lane) noexcept
    {
        std::uint64_t k = splitmix64_mix(seed + gamma);
        k = splitmix64_mix(k ^ splitmix64_mix(trial + 0x632be59bd9b4e019ULL));
        return splitmix64_mix(k ^ (lane * 0xd1b54a32d192ed03ULL));
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace wipt

#endif
