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

#include "fadingrelay/spectral.hpp"

#include "fadingrelay/error.hpp"

#include <Eigen/Dense>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

namespace fadingrelay::spectral {
namespace {

constexpr double kUnitVarianceTol = 1e-9;
constexpr double kMaxCondition = 1e6;
constexpr double kReflectionLimit = 1.0 - 1e-12;
constexpr long kMaxLag = 1000000;

std::string num(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

// Upsilon implied by unit variance for given Λ and Θ.
double unit_variance_upsilon(double lambda, double theta)
{
    return (1.0 - (1.0 - 2.0 * theta) * lambda) / (2.0 * theta);
}

double dense_prediction_error(const SpectralModel &m, int order, std::vector<std::complex<double>> *coeffs)
{
    using Mat = Eigen::MatrixXcd;
    using Vec = Eigen::VectorXcd;
    Mat R(order, order);
    Vec r(order);
    for (int i = 0; i < order; ++i) {
        r(i) = autocovariance(m, i + 1);
        for (int j = 0; j < order; ++j)
            R(i, j) = autocovariance(m, i - j);
    }
    const Vec a = R.fullPivLu().solve(r);
    if (coeffs != nullptr)
        coeffs->assign(a.data(), a.data() + order);
    return std::real(autocovariance(m, 0)) - std::real(r.dot(a));
}

} // namespace

SpectralModel SpectralModel::white()
{
    return SpectralModel(SpectrumKind::White, 1.0, 1.0, 0.5);
}

SpectralModel SpectralModel::piecewise(double upsilon, double lambda, double theta)
{
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw DomainError("out-of-band level must be positive, got " + num(lambda));
    if (!(upsilon > lambda) || !std::isfinite(upsilon))
        throw DomainError("in-band level must exceed the out-of-band level, got " + num(upsilon));
    if (!(theta > 0.0 && theta < 0.5))
        throw DomainError("band edge must lie in (0, 1/2), got " + num(theta));
    const double variance = 2.0 * upsilon * theta + (1.0 - 2.0 * theta) * lambda;
    if (std::abs(variance - 1.0) > kUnitVarianceTol)
        throw DomainError("spectral density does not integrate to one (" + num(variance) + ")");
    return SpectralModel(SpectrumKind::PiecewiseConstant, upsilon, lambda, theta);
}

double SpectralModel::density(double freq) const noexcept
{
    if (kind_ == SpectrumKind::White)
        return 1.0;
    return std::abs(freq) <= theta_ ? upsilon_ : lambda_;
}

void ChannelScenario::validate() const
{
    if (!(rho > 0.0) || !std::isfinite(rho))
        throw DomainError("rho must be positive and finite, got " + num(rho));
    if (!(sigma_sq > 0.0) || !std::isfinite(sigma_sq))
        throw DomainError("sigma_sq must be positive and finite, got " + num(sigma_sq));
}

SpectralModel make_piecewise(double target_eps_sq, double lambda, double theta)
{
    if (!(target_eps_sq > 0.0 && target_eps_sq < 1.0))
        throw InfeasibleError("target prediction error must lie in (0, 1), got " + num(target_eps_sq));
    if (!(lambda > 0.0 && lambda < target_eps_sq))
        throw InfeasibleError("out-of-band level must lie in (0, target), got " + num(lambda));
    if (!(theta > 0.0 && theta < 0.5))
        throw InfeasibleError("band edge must lie in (0, 1/2), got " + num(theta));

    const double log_target = std::log(target_eps_sq);
    const double log_lambda = std::log(lambda);
    auto mismatch = [&](double t) {
        return 2.0 * t * std::log(unit_variance_upsilon(lambda, t)) + (1.0 - 2.0 * t) * log_lambda - log_target;
    };

    // Scan for sign changes, refine each, keep the root nearest the hint.
    constexpr int kScan = 4000;
    double best = -1.0;
    double prev_t = 0.5 / kScan;
    double prev_g = mismatch(prev_t);
    for (int i = 2; i < kScan; ++i) {
        const double t = 0.5 * i / kScan;
        const double g = mismatch(t);
        if ((prev_g <= 0.0) != (g <= 0.0)) {
            std::uintmax_t iters = 200;
            const auto [lo, hi] = boost::math::tools::toms748_solve(
                mismatch, prev_t, t, prev_g, g, boost::math::tools::eps_tolerance<double>(52), iters);
            const double root = 0.5 * (lo + hi);
            if (best < 0.0 || std::abs(root - theta) < std::abs(best - theta))
                best = root;
        }
        prev_t = t;
        prev_g = g;
    }
    if (best < 0.0 || std::abs(best - theta) > 0.01 * theta)
        throw InfeasibleError("no unit-variance piecewise spectrum with eps^2 = " + num(target_eps_sq) +
                              ", lambda = " + num(lambda) + " has band edge near " + num(theta));
    return SpectralModel::piecewise(unit_variance_upsilon(lambda, best), lambda, best);
}

double prediction_error(const SpectralModel &m)
{
    if (m.is_white())
        return 1.0;
    return std::exp(log_integral(m, 0.0));
}

double log_integral(const SpectralModel &m, double c)
{
    if (!(c >= 0.0))
        throw DomainError("log integral offset must be nonnegative, got " + num(c));
    if (m.is_white())
        return std::log1p(c);
    const double w = 2.0 * m.theta();
    return w * std::log(m.upsilon() + c) + (1.0 - w) * std::log(m.lambda() + c);
}

double noisy_prediction_error(const SpectralModel &m, double xi)
{
    if (!(xi >= 0.0))
        throw DomainError("noise variance must be nonnegative, got " + num(xi));
    if (m.is_white())
        return 1.0;
    double value;
    if (xi < 1.0) {
        value = std::exp(log_integral(m, xi)) - xi;
    } else {
        const double w = 2.0 * m.theta();
        const double s = w * std::log1p(m.upsilon() / xi) + (1.0 - w) * std::log1p(m.lambda() / xi);
        value = xi * std::expm1(s);
    }
    return std::clamp(value, prediction_error(m), 1.0);
}

std::complex<double> autocovariance(const SpectralModel &m, long lag)
{
    if (std::abs(lag) > kMaxLag)
        throw DomainError("autocovariance lag out of range: " + std::to_string(lag));
    if (lag == 0)
        return m.is_white() ? 1.0 : 2.0 * m.upsilon() * m.theta() + (1.0 - 2.0 * m.theta()) * m.lambda();
    if (m.is_white())
        return 0.0;
    const double turns = std::fmod(static_cast<double>(lag) * m.theta(), 1.0);
    const double pi = std::numbers::pi;
    return (m.upsilon() - m.lambda()) * std::sin(2.0 * pi * turns) / (pi * static_cast<double>(lag));
}

long coherence_time(const SpectralModel &m)
{
    for (long lag = 1; lag <= kMaxLag; ++lag)
        if (std::abs(autocovariance(m, lag)) < 0.5)
            return lag;
    return kMaxLag;
}

PredictorFit fit_linear_predictor(const SpectralModel &m, int memory)
{
    if (memory < 1)
        throw DomainError("prediction memory must be at least 1, got " + std::to_string(memory));
    std::vector<std::complex<double>> r(memory + 1);
    for (int i = 0; i <= memory; ++i)
        r[i] = autocovariance(m, i);

    PredictorFit fit;
    fit.mse_by_order.assign(1, std::real(r[0]));
    auto &a = fit.coefficients;
    std::vector<std::complex<double>> prev;
    double err = std::real(r[0]);
    for (int p = 1; p <= memory; ++p) {
        std::complex<double> acc = r[p];
        for (int j = 1; j < p; ++j)
            acc -= a[j - 1] * r[p - j];
        const std::complex<double> k = acc / err;
        if (std::abs(k) >= kReflectionLimit) {
            // Levinson breaks down; solve the remaining orders directly.
            for (int q = p; q <= memory; ++q)
                fit.mse_by_order.push_back(dense_prediction_error(m, q, q == memory ? &a : nullptr));
            err = fit.mse_by_order.back();
            break;
        }
        prev = a;
        a.push_back(k);
        for (int j = 1; j < p; ++j)
            a[j - 1] = prev[j - 1] - k * std::conj(prev[p - j - 1]);
        err *= 1.0 - std::norm(k);
        fit.mse_by_order.push_back(err);
    }

    double norm1 = std::abs(r[0]);
    for (int i = 1; i < memory; ++i)
        norm1 += 2.0 * std::abs(r[i]);
    fit.condition_estimate = err > 0.0 ? norm1 / err : std::numeric_limits<double>::infinity();
    if (!(fit.condition_estimate <= kMaxCondition))
        throw IllConditionedError("autocovariance matrix of order " + std::to_string(memory) +
                                      " is ill-conditioned (estimate " + num(fit.condition_estimate) + ")",
                                  fit.condition_estimate);
    return fit;
}

double finite_memory_prediction_error(const SpectralModel &m, int memory)
{
    if (m.is_white()) {
        if (memory < 1)
            throw DomainError("prediction memory must be at least 1, got " + std::to_string(memory));
        return 1.0;
    }
    return fit_linear_predictor(m, memory).mse_by_order.back();
}

} // namespace fadingrelay::spectral
