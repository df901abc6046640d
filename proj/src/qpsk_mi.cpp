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

#include "fadingrelay/qpsk_mi.hpp"

#include "fadingrelay/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <string>

namespace fadingrelay::qpsk {
namespace {

using cplx = std::complex<double>;

const double kLog4 = std::log(4.0);
constexpr int kMaxDoublings = 4;

const std::array<cplx, 4> kSymbols{cplx(1.0, 0.0), cplx(0.0, 1.0), cplx(-1.0, 0.0), cplx(0.0, -1.0)};

// Running count, mean and sum of squared deviations.
struct Moments {
    std::int64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x)
    {
        ++n;
        const double d = x - mean;
        mean += d / static_cast<double>(n);
        m2 += d * (x - mean);
    }

    void merge(const Moments &o)
    {
        if (o.n == 0)
            return;
        const double total = static_cast<double>(n + o.n);
        const double d = o.mean - mean;
        mean += d * static_cast<double>(o.n) / total;
        m2 += o.m2 + d * d * static_cast<double>(n) * static_cast<double>(o.n) / total;
        n += o.n;
    }
};

std::mt19937_64 block_engine(std::uint64_t seed, std::uint64_t block)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
    return std::mt19937_64(seq);
}

// Posterior entropy of the transmitted symbol, averaged over the four
// symbols for one draw of the normalized gain g and noise w.
double stratified_posterior_entropy(cplx g, cplx w)
{
    double total = 0.0;
    for (const cplx &ui : kSymbols) {
        const cplx y = g * ui + w;
        std::array<double, 4> logit{};
        double top = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < 4; ++j) {
            logit[j] = -std::norm(y - g * kSymbols[j]);
            top = std::max(top, logit[j]);
        }
        double z = 0.0;
        double weighted = 0.0;
        for (int j = 0; j < 4; ++j) {
            const double e = std::exp(logit[j] - top);
            z += e;
            weighted += e * (logit[j] - top);
        }
        total += std::log(z) - weighted / z;
    }
    return 0.25 * total;
}

Moments run_block(double sqrt_eta, std::uint64_t seed, std::uint64_t block, std::int64_t count)
{
    auto engine = block_engine(seed, block);
    std::normal_distribution<double> normal(0.0, std::numbers::sqrt2 / 2.0);
    Moments m;
    for (std::int64_t k = 0; k < count; ++k) {
        const double gr = normal(engine);
        const double gi = normal(engine);
        const double wr = normal(engine);
        const double wi = normal(engine);
        m.add(stratified_posterior_entropy(sqrt_eta * cplx(gr, gi), cplx(wr, wi)));
    }
    return m;
}

void check_nonnegative(double v, const char *name)
{
    if (!(v >= 0.0) || !std::isfinite(v))
        throw DomainError(std::string(name) + " must be nonnegative and finite");
}

} // namespace

void McConfig::validate() const
{
    if (samples < 10'000)
        throw DomainError("Monte Carlo sample count must be at least 10000, got " + std::to_string(samples));
    if (!(target_se > 0.0))
        throw DomainError("target standard error must be positive");
}

McEstimate qpsk_mi_eta(double eta, const McConfig &mc)
{
    mc.validate();
    if (std::isinf(eta) && eta > 0.0)
        return {kLog4, 0.0, 0};
    check_nonnegative(eta, "eta");
    if (eta == 0.0)
        return {0.0, 0.0, 0};

    const double sqrt_eta = std::sqrt(eta);
    Moments total;
    std::uint64_t next_block = 0;
    std::int64_t target = mc.samples;
    for (int doubling = 0;; ++doubling) {
        while (total.n < target) {
            const std::int64_t count = std::min<std::int64_t>(kBlockSize, target - total.n);
            total.merge(run_block(sqrt_eta, mc.seed, next_block++, count));
        }
        const double se = std::sqrt(total.m2 / static_cast<double>(total.n - 1) / static_cast<double>(total.n));
        if (se <= mc.target_se || doubling == kMaxDoublings) {
            McEstimate est;
            est.value = kLog4 - total.mean;
            est.std_error = se;
            est.samples_used = total.n;
            return est;
        }
        // Blocks are seeded independently, so the earlier ones are reused.
        target = 2 * total.n;
    }
}

McEstimate qpsk_mixture_mi(double coherent_gain_var, double residual_var, double amplitude_sq,
                           double extra_noise_var, const McConfig &mc)
{
    check_nonnegative(coherent_gain_var, "coherent gain variance");
    check_nonnegative(residual_var, "residual variance");
    check_nonnegative(extra_noise_var, "extra noise variance");
    if (!(amplitude_sq > 0.0) || !std::isfinite(amplitude_sq))
        throw DomainError("squared amplitude must be positive and finite");
    if (coherent_gain_var == 0.0 && residual_var == 0.0 && extra_noise_var == 0.0)
        throw DomainError("at least one variance must be positive");
    mc.validate();
    if (coherent_gain_var == 0.0)
        return {0.0, 0.0, 0};
    const double v = residual_var * amplitude_sq + extra_noise_var;
    if (v == 0.0)
        return {kLog4, 0.0, 0};
    return qpsk_mi_eta(coherent_gain_var * amplitude_sq / v, mc);
}

McEstimate miso_qpsk_lower(const spectral::ChannelScenario &s, double snr, const McConfig &mc)
{
    s.validate();
    if (!(snr > 0.0) || !std::isfinite(snr))
        throw DomainError("snr must be positive and finite");
    const double gain = 1.0 + s.rho * s.rho;
    const double xi = 1.0 / (gain * snr);
    const double a_sq = gain * snr * s.sigma_sq;
    const spectral::SpectralModel &first = s.miso_qpsk_links == spectral::MisoQpskLinks::Links13 ? s.link1 : s.link2;
    McEstimate best;
    bool have = false;
    for (const spectral::SpectralModel *link : {&first, &s.link3}) {
        const double resid = spectral::noisy_prediction_error(*link, xi);
        const McEstimate e = qpsk_mixture_mi(1.0 - resid, resid, a_sq, s.sigma_sq, mc);
        if (!have || e.value > best.value) {
            best = e;
            have = true;
        }
    }
    return best;
}

std::vector<double> default_delta_grid()
{
    constexpr int kPoints = 16;
    std::vector<double> grid(kPoints);
    for (int i = 0; i < kPoints; ++i)
        grid[i] = std::pow(10.0, -3.0 + 3.0 * i / (kPoints - 1));
    grid.back() = 1.0;
    return grid;
}

DfQpskEstimate df_qpsk_lower(const spectral::ChannelScenario &s, double snr, const McConfig &mc,
                             const std::vector<double> &delta_grid)
{
    s.validate();
    if (!s.link2.is_white())
        throw PreconditionError("this bound requires a memoryless transmitter-to-receiver link");
    if (!(snr > 0.0) || !std::isfinite(snr))
        throw DomainError("snr must be positive and finite");
    if (delta_grid.empty())
        throw DomainError("delta grid is empty");
    const double a_sq = snr * s.sigma_sq;
    const double rho_sq = s.rho * s.rho;

    DfQpskEstimate out;
    out.delta_grid = delta_grid;
    bool have = false;
    for (const double delta : delta_grid) {
        if (!(delta > 0.0 && delta <= 1.0))
            throw DomainError("delta grid entries must lie in (0, 1]");
        const double d2 = delta * delta;
        const double resid1 = spectral::noisy_prediction_error(s.link1, 1.0 / (d2 * snr));
        const McEstimate to_relay = qpsk_mixture_mi(1.0 - resid1, resid1, d2 * a_sq, s.sigma_sq, mc);
        const double resid3 = spectral::noisy_prediction_error(s.link3, d2 / rho_sq + 1.0 / (rho_sq * snr));
        const McEstimate to_receiver =
            qpsk_mixture_mi(1.0 - resid3, resid3, a_sq / rho_sq, d2 * a_sq + s.sigma_sq, mc);
        McEstimate cand;
        cand.value = std::min(to_relay.value, to_receiver.value);
        cand.std_error = std::hypot(to_relay.std_error, to_receiver.std_error);
        cand.samples_used = to_relay.samples_used + to_receiver.samples_used;
        if (!have || cand.value > out.estimate.value) {
            out.estimate = cand;
            out.best_delta = delta;
            have = true;
        }
    }
    return out;
}

} // namespace fadingrelay::qpsk
