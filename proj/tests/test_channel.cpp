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
#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "wipt/channel.hpp"

#include <cmath>
#include <vector>

using Catch::Approx;
using namespace wipt;

TEST_CASE("path_loss reference values", "[channel]")
{
    CHECK(path_loss(1.0, 4.0) == Approx(1e-2).epsilon(1e-15));
    CHECK(path_loss(10.0, 4.0) == Approx(1e-6).epsilon(1e-15));
    CHECK(path_loss(50.0, 4.0) == Approx(1.6e-9).epsilon(1e-15));
}

TEST_CASE("path_loss is separable and strictly decreasing", "[channel]")
{
    for (double nu : {2.0, 3.0, 4.0, 3.7})
    {
        double prev = path_loss(0.5, nu);
        for (double d = 1.0; d < 200.0; d *= 1.37)
        {
            const double g = path_loss(d, nu);
            CHECK(std::abs(g - path_loss(1.0, nu) * std::pow(d, -nu)) <= 1e-12 * g);
            CHECK(g < prev);
            prev = g;
        }
    }
}

TEST_CASE("path_loss rejects nonpositive distance and exponent", "[channel]")
{
    CHECK_THROWS_AS(path_loss(0.0, 4.0), wipt::domain_error);
    CHECK_THROWS_AS(path_loss(-3.0, 4.0), wipt::domain_error);
    CHECK_THROWS_AS(path_loss(10.0, 0.0), wipt::domain_error);
    CHECK_THROWS_AS((PathLossModel{0.0, 4.0}.gain(1.0)), wipt::domain_error);
}

TEST_CASE("dBm conversion", "[channel]")
{
    CHECK(dbm_to_watts(30.0) == 1.0);
    CHECK(dbm_to_watts(-125.0) == Approx(3.1622776601683795e-16).epsilon(1e-14));
}

TEST_CASE("draw_channel statistics", "[channel]")
{
    SECTION("mean squared norm equals the dimension")
    {
        const int trials = 100000;
        std::vector<double> norms(trials);
        for (int t = 0; t < trials; ++t)
        {
            Stream rng(11, t, Lane::PowerChannel);
            norms[t] = draw_channel(4, rng).squaredNorm();
        }
        const auto s = oracle::mean_se(norms);
        CHECK(std::abs(s.mean - 4.0) < 0.05);
        CHECK(std::abs(s.mean - 4.0) < 3 * s.se);
    }
    SECTION("scalar channel power is exponential with mean 1 (KS at 1%)")
    {
        const int trials = 20000;
        std::vector<double> p(trials);
        for (int t = 0; t < trials; ++t)
        {
            Stream rng(12, t, Lane::PowerChannel);
            p[t] = std::norm(draw_channel(1, rng)[0]);
        }
        const double d = oracle::ks_statistic(p, [](double x) { return 1.0 - std::exp(-x); });
        CHECK(d < oracle::ks_critical_1pct(p.size()));
    }
}

TEST_CASE("draw_channel is deterministic and rejects empty dimension", "[channel]")
{
    Stream a(5, 3, Lane::PowerChannel), b(5, 3, Lane::PowerChannel);
    CHECK(draw_channel(8, a) == draw_channel(8, b));
    Stream c(5, 3, Lane::PowerChannel);
    CHECK_THROWS_AS(draw_channel(0, c), wipt::domain_error);
}

TEST_CASE("apply_csi_error", "[channel]")
{
    SECTION("rho = 1 returns h exactly")
    {
        Stream rng(1, 0, Lane::PowerChannel), err(1, 0, Lane::CsiError);
        const ComplexVector h = draw_channel(6, rng);
        CHECK(apply_csi_error(h, 1.0, err) == h);
    }
    SECTION("rho = 0 is uncorrelated with h")
    {
        const int trials = 100000;
        std::vector<double> a(trials), b(trials);
        for (int t = 0; t < trials; ++t)
        {
            Stream rng(2, t, Lane::PowerChannel), err(2, t, Lane::CsiError);
            const ComplexVector h = draw_channel(1, rng);
            const ComplexVector e = apply_csi_error(h, 0.0, err);
            a[t] = h[0].real();
            b[t] = e[0].real();
        }
        CHECK(std::abs(oracle::correlation(a, b)) < 0.01);
    }
    SECTION("MRT on the estimate: mean gain rho^2 Nt + 1 - rho^2")
    {
        const int trials = 10000;
        const double rho = 0.9;
        std::vector<double> gain(trials);
        for (int t = 0; t < trials; ++t)
        {
            Stream rng(3, t, Lane::PowerChannel), err(3, t, Lane::CsiError);
            const ComplexVector h = draw_channel(100, rng);
            const ComplexVector est = apply_csi_error(h, rho, err);
            gain[t] = std::norm(est.dot(h)) / est.squaredNorm();
        }
        const double expected = rho * rho * 100 + (1 - rho * rho);
        CHECK(expected == Approx(81.19));
        CHECK(oracle::mean_se(gain).mean == Approx(expected).epsilon(0.01));
    }
    SECTION("expected squared norm is preserved for every rho")
    {
        for (double rho : {0.0, 0.3, 0.7, 0.95})
        {
            const int trials = 20000;
            std::vector<double> n(trials);
            for (int t = 0; t < trials; ++t)
            {
                Stream rng(4, t, Lane::PowerChannel), err(4, t, Lane::CsiError);
                n[t] = apply_csi_error(draw_channel(4, rng), rho, err).squaredNorm();
            }
            const auto s = oracle::mean_se(n);
            CHECK(std::abs(s.mean - 4.0) < 3 * s.se);
        }
    }
    SECTION("rho outside [0, 1] is a domain error")
    {
        Stream rng(1, 0, Lane::PowerChannel), err(1, 0, Lane::CsiError);
        const ComplexVector h = draw_channel(2, rng);
        CHECK_THROWS_AS(apply_csi_error(h, -0.1, err), wipt::domain_error);
        CHECK_THROWS_AS(apply_csi_error(h, 1.1, err), wipt::domain_error);
    }
}

TEST_CASE("CSI model validation and naming", "[channel]")
{
    CHECK_NOTHROW(validate(CsiModel{FeedbackBits{0}}));
    CHECK_THROWS_AS(validate(CsiModel{TddAccuracy{1.5}}), wipt::domain_error);
    CHECK_THROWS_AS(validate(CsiModel{FeedbackBits{max_feedback_bits + 1}}), wipt::domain_error);
    CHECK(describe(PerfectCsi{}) == "full");
    CHECK(describe(FeedbackBits{4}) == "B=4");
    CHECK(describe(TddAccuracy{0.9}) == "rho=0.9");
}
