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
#include "fadingrelay/spectral.hpp"
#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <random>

using namespace fadingrelay;
using namespace fadingrelay::spectral;

namespace {

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

SpectralModel link1() { return make_piecewise(1e-4, 1e-5, 0.08679); }
SpectralModel link3() { return make_piecewise(1e-2, 0.005, 0.04503); }

double unit_variance_residual(const SpectralModel &m)
{
    return 2.0 * m.upsilon() * m.theta() + (1.0 - 2.0 * m.theta()) * m.lambda() - 1.0;
}

} // namespace

TEST_CASE("piecewise constructor invariants")
{
    const auto m = SpectralModel::piecewise(oracle::kLink3Upsilon, 0.005, oracle::kLink3Theta);
    CHECK(m.kind() == SpectrumKind::PiecewiseConstant);
    CHECK(m.density(0.0) == oracle::kLink3Upsilon);
    CHECK(m.density(0.3) == 0.005);
    CHECK(m.density(-0.3) == 0.005);
    CHECK(SpectralModel::white().density(0.2) == 1.0);

    CHECK_THROWS_AS(SpectralModel::piecewise(2.0, 0.0, 0.25), DomainError);
    CHECK_THROWS_AS(SpectralModel::piecewise(2.0, -0.5, 0.375), DomainError);
    CHECK_THROWS_AS(SpectralModel::piecewise(2.0, 0.5, 0.5), DomainError);
    CHECK_THROWS_AS(SpectralModel::piecewise(2.0, 0.5, 0.3), DomainError);
    CHECK_THROWS_AS(SpectralModel::piecewise(0.5, 2.0, 0.375), DomainError);
    CHECK_NOTHROW(SpectralModel::piecewise(1.5, 0.5, 0.25));
}

TEST_CASE("make_piecewise reproduces the benchmark spectra")
{
    const auto m1 = link1();
    CHECK(rel_err(m1.upsilon(), 5.76034) < 2e-5);
    CHECK(rel_err(m1.upsilon(), oracle::kLink1Upsilon) < 1e-10);
    CHECK(rel_err(m1.theta(), oracle::kLink1Theta) < 1e-10);
    CHECK(rel_err(prediction_error(m1), 1e-4) < 1e-6);
    CHECK(std::abs(unit_variance_residual(m1)) < 1e-9);

    const auto m3 = link3();
    CHECK(rel_err(m3.upsilon(), oracle::kLink3Upsilon) < 1e-10);
    CHECK(rel_err(m3.theta(), oracle::kLink3Theta) < 1e-10);
    CHECK(rel_err(prediction_error(m3), 1e-2) < 1e-6);
    CHECK(std::abs(unit_variance_residual(m3)) < 1e-9);
}

TEST_CASE("the rounded published link-3 triple is not a unit-variance spectrum")
{
    // Υ = 10.99684, Λ = 0.005, Θ = 0.04503 integrates to about 0.9949, so no
    // unit-variance model can carry that Υ; make_piecewise keeps ε² and
    // unit variance exact and lands at Υ ≈ 11.0607 instead.
    const double integral = 2.0 * 10.99684 * 0.04503 + (1.0 - 2.0 * 0.04503) * 0.005;
    CHECK(std::abs(integral - 1.0) > 4e-3);
    CHECK_THROWS_AS(SpectralModel::piecewise(10.99684, 0.005, 0.04503), DomainError);
}

TEST_CASE("make_piecewise rejects infeasible targets")
{
    CHECK_THROWS_AS(make_piecewise(1.0, 0.5, 0.25), InfeasibleError);
    CHECK_THROWS_AS(make_piecewise(1.5, 0.5, 0.25), InfeasibleError);
    CHECK_THROWS_AS(make_piecewise(1e-3, 1e-2, 0.25), InfeasibleError);
    CHECK_THROWS_AS(make_piecewise(1e-2, 0.005, 0.3), InfeasibleError);
}

TEST_CASE("make_piecewise always closes the unit-variance constraint")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int built = 0;
    for (int i = 0; i < 200; ++i) {
        const double lambda = std::pow(10.0, -5.0 + 4.0 * u(rng));
        const double target = lambda * std::pow(1.0 / lambda, 0.05 + 0.9 * u(rng));
        const double theta = oracle::solve_band_edge(target, lambda, 0.25);
        if (theta <= 0.0)
            continue;
        const auto m = make_piecewise(target, lambda, theta);
        ++built;
        CHECK(std::abs(m.theta() - theta) < 1e-9);
        CHECK(std::abs(unit_variance_residual(m)) < 1e-9);
        CHECK(rel_err(prediction_error(m), target) < 1e-6);
    }
    CHECK(built > 150);
}

TEST_CASE("prediction error")
{
    CHECK(prediction_error(SpectralModel::white()) == 1.0);
    CHECK(rel_err(prediction_error(link1()), 1e-4) < 5e-3);
    CHECK(rel_err(prediction_error(link3()), 1e-2) < 5e-3);
}

TEST_CASE("noisy prediction error")
{
    const auto m3 = link3();
    CHECK(noisy_prediction_error(m3, 0.0) == prediction_error(m3));
    CHECK(noisy_prediction_error(SpectralModel::white(), 0.0) == 1.0);
    CHECK(noisy_prediction_error(SpectralModel::white(), 3.7) == 1.0);
    CHECK(noisy_prediction_error(SpectralModel::white(), 1e9) == 1.0);

    const double quad =
        std::exp(oracle::log_integral_quad(m3.upsilon(), m3.lambda(), m3.theta(), 0.01)) - 0.01;
    CHECK(std::abs(noisy_prediction_error(m3, 0.01) - quad) < 1e-10);
    CHECK(rel_err(noisy_prediction_error(m3, 0.01), oracle::kLink3Noisy0p01) < 1e-12);

    CHECK_THROWS_AS(noisy_prediction_error(m3, -1e-3), DomainError);
}

TEST_CASE("noisy prediction error is monotone and bounded")
{
    for (const auto &m : {link1(), link3()}) {
        const double eps = prediction_error(m);
        double prev = eps;
        for (int i = 0; i <= 120; ++i) {
            const double xi = std::pow(10.0, -10.0 + 0.14 * i);
            const double v = noisy_prediction_error(m, xi);
            INFO("xi = " << xi);
            CHECK(v >= prev - 1e-15);
            CHECK(v >= eps);
            CHECK(v <= 1.0);
            prev = v;
        }
        CHECK(std::abs(noisy_prediction_error(m, 1e6) - 1.0) < 1e-4);
    }
}

TEST_CASE("log integral matches quadrature")
{
    const auto m1 = link1();
    for (double c : {0.0, 1e-8, 1e-3, 0.5, 10.0, 1e5}) {
        INFO("c = " << c);
        CHECK(std::abs(log_integral(m1, c) - oracle::log_integral_quad(m1.upsilon(), m1.lambda(), m1.theta(), c)) <
              1e-12);
    }
    CHECK(log_integral(SpectralModel::white(), 0.25) == std::log1p(0.25));
}

TEST_CASE("autocovariance")
{
    const auto m3 = link3();
    CHECK(autocovariance(m3, 0) == std::complex<double>(1.0, 0.0));
    CHECK(std::abs(autocovariance(SpectralModel::white(), 0) - 1.0) == 0.0);
    CHECK(autocovariance(SpectralModel::white(), 5) == std::complex<double>(0.0, 0.0));
    CHECK(autocovariance(SpectralModel::white(), -3) == std::complex<double>(0.0, 0.0));

    for (long lag : {1L, 2L, 7L, 40L, -3L}) {
        const auto r = autocovariance(m3, lag);
        INFO("lag = " << lag);
        CHECK(std::abs(r.imag()) < 1e-12);
        CHECK(std::abs(r.real() - oracle::autocovariance_quad(m3.upsilon(), m3.lambda(), m3.theta(), lag)) <
              1e-10);
        const double closed = (m3.upsilon() - m3.lambda()) * std::sin(2.0 * M_PI * lag * m3.theta()) / (M_PI * lag);
        CHECK(std::abs(r.real() - closed) < 1e-13);
    }
    const double big = autocovariance(m3, 1'000'000).real();
    CHECK(std::abs(big) <= (m3.upsilon() - m3.lambda()) / (M_PI * 1e6) + 1e-15);
    CHECK_THROWS_AS(autocovariance(m3, 1'000'001), DomainError);
}

TEST_CASE("autocovariance matrices are positive semidefinite")
{
    for (const auto &m : {link1(), link3()}) {
        const int n = 64;
        Eigen::MatrixXd r(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                r(i, j) = autocovariance(m, std::abs(i - j)).real();
        for (int k = 1; k <= n; ++k) {
            const double minor = r.topLeftCorner(k, k).determinant();
            INFO("order " << k);
            CHECK(minor >= -1e-10);
        }
    }
}

TEST_CASE("coherence time")
{
    CHECK(coherence_time(SpectralModel::white()) == 1);
    const auto m3 = link3();
    const long t = coherence_time(m3);
    CHECK(t > 1);
    CHECK(std::abs(autocovariance(m3, t).real()) < 0.5);
    CHECK(std::abs(autocovariance(m3, t - 1).real()) >= 0.5);
}

TEST_CASE("finite memory prediction error small orders")
{
    CHECK(finite_memory_prediction_error(SpectralModel::white(), 1) == 1.0);
    CHECK(finite_memory_prediction_error(SpectralModel::white(), 50) == 1.0);

    for (const auto &m : {link1(), link3()}) {
        const double r1 = autocovariance(m, 1).real();
        const double r2 = autocovariance(m, 2).real();
        CHECK(std::abs(finite_memory_prediction_error(m, 1) - (1.0 - r1 * r1)) < 1e-14);
        CHECK(std::abs(finite_memory_prediction_error(m, 2) - oracle::two_tap_mse(r1, r2)) < 1e-12);
    }
    CHECK(rel_err(finite_memory_prediction_error(link3(), 2), oracle::kLink3TwoTap) < 1e-11);
    CHECK_THROWS_AS(finite_memory_prediction_error(link3(), 0), DomainError);
}

TEST_CASE("finite memory prediction error decreases toward the infinite-past value")
{
    for (const auto &m : {link1(), link3()}) {
        const auto fit = fit_linear_predictor(m, 512);
        const double eps = prediction_error(m);
        REQUIRE(fit.mse_by_order.size() == 513);
        CHECK(fit.mse_by_order[0] == 1.0);
        for (std::size_t k = 1; k < fit.mse_by_order.size(); ++k) {
            INFO("order " << k);
            CHECK(fit.mse_by_order[k] <= fit.mse_by_order[k - 1] + 1e-15);
            CHECK(fit.mse_by_order[k] >= eps);
        }
        CHECK(fit.mse_by_order[512] - eps < fit.mse_by_order[8] - eps);
        CHECK(fit.condition_estimate >= 1.0);
        CHECK(fit.mse_by_order[64] == finite_memory_prediction_error(m, 64));
    }
}

TEST_CASE("predictor coefficients solve the normal equations")
{
    const auto m = link3();
    const int k = 16;
    const auto fit = fit_linear_predictor(m, k);
    REQUIRE(fit.coefficients.size() == std::size_t(k));
    for (int i = 1; i <= k; ++i) {
        std::complex<double> lhs = 0.0;
        for (int j = 1; j <= k; ++j)
            lhs += fit.coefficients[j - 1] * autocovariance(m, i - j);
        INFO("row " << i);
        CHECK(std::abs(lhs - autocovariance(m, i)) < 1e-10);
    }
}

TEST_CASE("scenario validation")
{
    ChannelScenario s;
    CHECK_NOTHROW(s.validate());
    s.rho = 0.0;
    CHECK_THROWS_AS(s.validate(), DomainError);
    s.rho = 1.0;
    s.sigma_sq = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(s.validate(), DomainError);
}
