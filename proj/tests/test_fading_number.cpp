// SPDX-License-Identifier: Apache-2.0
//
// fadingrelay: capacity bounds for noncoherent fading relay channels
// Copyright (C) 2026 The fadingrelay authors
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

#include "fadingrelay/error.hpp"
#include "fadingrelay/fading_number.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace fadingrelay;
using namespace fadingrelay::fading;

namespace {

const double kLog2 = std::log(2.0);

spectral::ChannelScenario scenario_from(double e1, double e2, double e3)
{
    auto model = [](double e) {
        if (e == 1.0)
            return spectral::SpectralModel::white();
        const double lambda = e * 0.5;
        return spectral::make_piecewise(e, lambda, oracle::solve_band_edge(e, lambda, 0.25));
    };
    spectral::ChannelScenario s;
    s.link1 = model(e1);
    s.link2 = model(e2);
    s.link3 = model(e3);
    return s;
}

} // namespace

TEST_CASE("point-to-point fading number")
{
    CHECK(std::abs(p2p_fading_number(1e-2) - 3.0280) < 1e-4);
    CHECK(std::abs(p2p_fading_number(1e-4) - 7.6331) < 1e-4);
    CHECK(std::abs(p2p_fading_number(1e-2) - oracle::kChi1em2) < 1e-14);
    CHECK(std::abs(p2p_fading_number(1e-4) - oracle::kChi1em4) < 1e-14);
    CHECK(p2p_fading_number(1.0) == -1.0 - oracle::euler());
    CHECK(std::abs(p2p_fading_number(1.0) - -1.5772) < 1e-4);
    CHECK_THROWS_AS(p2p_fading_number(0.0), DomainError);
    CHECK_THROWS_AS(p2p_fading_number(1.5), DomainError);
    CHECK_THROWS_AS(p2p_fading_number(-0.1), DomainError);
}

TEST_CASE("relay upper bound")
{
    CHECK(std::abs(relay_upper_bound(0.1, 0.01, 0.05) - 3.0280) < 1e-3);
    const double g = oracle::euler();
    CHECK(std::abs(relay_upper_bound(0.1, 0.01, 0.05) - std::min(-2 * g + std::log(10.0) + std::log(100.0),
                                                                   oracle::kChi1em2)) < 1e-14);
    CHECK(relay_upper_bound(1.0, 1.0, 1.0) == -1.0 - g);
    CHECK(std::abs(relay_upper_bound(1e-4, 1.0, 1e-2) - 3.0280) < 1e-4);
}

TEST_CASE("relay lower bound")
{
    CHECK(std::abs(relay_lower_bound_df(1e-4, 1.0, 1e-2) - 3.0180) < 1e-4);
    CHECK(std::abs(relay_lower_bound_df(1e-2, 1.0, 1e-2) - 2.3348) < 1e-4);
    CHECK(std::abs(relay_lower_bound_df(1e-4, 1.0, 1e-2) - oracle::kLowerTop) < 1e-13);
    CHECK(std::abs(relay_lower_bound_df(1e-2, 1.0, 1e-2) - oracle::kLowerBottom) < 1e-13);
    CHECK(std::abs(relay_lower_bound_df(1e-300, 1.0, 0.03) - p2p_fading_number(0.03)) < 1e-14);
}

TEST_CASE("one-bit form")
{
    CHECK(std::abs(df_one_bit_form(4.0, 4.0) - (4.0 - kLog2)) < 1e-15);
    CHECK(std::abs(df_one_bit_form(10.0, 3.0) - 2.99909) < 1e-5);
    CHECK(std::abs(df_one_bit_form(10.0, 3.0) - (3.0 - std::log1p(std::exp(-7.0)))) < 1e-15);
    const double far = df_one_bit_form(-500.0, 500.0);
    CHECK(std::isfinite(far));
    CHECK(std::abs(far - -500.0) < 1e-12);
    CHECK(std::abs(df_one_bit_form(1e6, -1e6) - -1e6) < 1e-6);
}

TEST_CASE("one-bit form equals both printed expressions")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    for (int i = 0; i < 10'000; ++i) {
        const double c1 = u(rng);
        const double c3 = u(rng);
        const double first = c3 - std::log1p(std::exp(c3 - c1));
        const double second = c1 - std::log1p(std::exp(c1 - c3));
        const double v = df_one_bit_form(c1, c3);
        CHECK(std::abs(v - first) <= 1e-12);
        CHECK(std::abs(v - second) <= 1e-12);
    }
}

TEST_CASE("one-bit form equals the decode-and-forward bound when direct link is weak")
{
    const double e1 = 1e-4, e3 = 1e-2;
    CHECK(std::abs(df_one_bit_form(p2p_fading_number(e1), p2p_fading_number(e3)) -
                   relay_lower_bound_df(e1, 1.0, e3)) < 1e-13);
}

TEST_CASE("regime classification")
{
    const auto top = classify_regime(1e-4, 1.0, 1e-2);
    CHECK(top.regime == Regime::CooperationStrictlyBetter);
    CHECK(top.cooperation_strictly_better);
    CHECK(top.one_bit_gap);
    CHECK_FALSE(top.direct_optimal);
    CHECK(std::abs(top.gap_to_miso - 0.00995) < 1e-5);
    CHECK(std::abs(top.gap_to_miso - std::log(1.01)) < 1e-13);

    const auto direct = classify_regime(0.5, 0.01, 0.05);
    CHECK(direct.regime == Regime::DirectOptimal);
    CHECK(direct.upper == direct.lower);
    CHECK(std::abs(direct.upper - 3.0280) < 1e-4);

    CHECK(classify_regime(0.2, 0.15, 0.1).regime == Regime::Indeterminate);
    const auto onebit = classify_regime(0.05, 0.1, 0.1);
    CHECK(onebit.regime == Regime::DirectOptimal);
    CHECK(onebit.one_bit_gap);
    CHECK(classify_regime(0.05, 0.12, 0.1).regime == Regime::OneBitGap);

    CHECK(to_string(Regime::Indeterminate) == "Indeterminate");
}

TEST_CASE("scenario overloads read the link prediction errors")
{
    const auto s = scenario_from(1e-4, 1.0, 1e-2);
    const auto r = classify_regime(s);
    CHECK(std::abs(r.eps1_sq - 1e-4) < 1e-12);
    CHECK(r.eps2_sq == 1.0);
    CHECK(std::abs(r.lower - relay_lower_bound_df(s)) == 0.0);
    CHECK(std::abs(r.upper - relay_upper_bound(s)) == 0.0);
    CHECK(std::abs(r.lower - 3.0180) < 1e-4);
}

TEST_CASE("bounds do not depend on rho")
{
    auto s = scenario_from(3e-3, 0.2, 1e-2);
    const double up = relay_upper_bound(s);
    const double lo = relay_lower_bound_df(s);
    for (double rho : {1e-3, 0.7, 1.0, 25.0}) {
        s.rho = rho;
        CHECK(relay_upper_bound(s) == up);
        CHECK(relay_lower_bound_df(s) == lo);
    }
}

TEST_CASE("random scenarios: ordering and corollaries")
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> log_eps(std::log(1e-8), 0.0);
    auto draw = [&]() { return std::exp(log_eps(rng)); };
    for (int i = 0; i < 2000; ++i) {
        const double e1 = draw(), e2 = draw(), e3 = draw();
        const auto r = classify_regime(e1, e2, e3);
        CHECK(r.lower <= r.upper + 1e-12);
        CHECK(r.gap_to_miso >= 0.0);
        if (e2 <= e3) {
            CHECK(r.regime == Regime::DirectOptimal);
            CHECK(std::abs(r.upper - r.lower) <= 1e-12);
            CHECK(r.upper == p2p_fading_number(e2));
        }
        if (e1 <= e3)
            CHECK(r.gap_to_miso <= kLog2 + 1e-12);
    }
}

TEST_CASE("optimal power split")
{
    CHECK(optimal_df_alpha(0.3, 0.3) == 0.5);
    CHECK(std::abs(optimal_df_alpha(1e-4, 1e-2) - 1.0 / 101.0) < 1e-15);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-15.0, 0.0);
    for (int i = 0; i < 1000; ++i) {
        const double e1 = std::exp(u(rng)), e3 = std::exp(u(rng));
        const double a = optimal_df_alpha(e1, e3);
        CHECK(a > 0.0);
        CHECK(a < 1.0);
        // 1 - a carries the rounding of a, amplified by 1 / (1 - a).
        const double tol = 1e-12 + 4e-16 / (1.0 - a);
        CHECK(std::abs((std::log(1.0 / e1) + std::log(a)) - (std::log(1.0 / e3) + std::log1p(-a))) < tol);
    }
    CHECK_THROWS_AS(optimal_df_alpha(0.0, 0.5), DomainError);
}
