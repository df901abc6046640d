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

#include "fadingrelay/simlab.hpp"

#include "fadingrelay/error.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <fftw3.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <mutex>
#include <numbers>
#include <random>

namespace fadingrelay::simlab {
namespace {

using cplx = std::complex<double>;

std::mutex &planner_mutex()
{
    static std::mutex m;
    return m;
}

// In-place complex DFT; sign is FFTW_FORWARD or FFTW_BACKWARD.
void dft(std::vector<cplx> &data, int sign)
{
    auto *buf = reinterpret_cast<fftw_complex *>(data.data());
    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft_1d(static_cast<int>(data.size()), buf, buf, sign, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
}

std::mt19937_64 realization_engine(std::uint64_t seed, int realization)
{
    const auto r = static_cast<std::uint64_t>(realization);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(r >> 32), 0x9a7bu};
    return std::mt19937_64(seq);
}

// Fill with √w_j · Z_j, Z_j ~ CN(0, 1), then transform and scale.
std::vector<cplx> synthesize(const std::vector<double> &weights, std::uint64_t seed, int realization,
                             std::size_t keep)
{
    auto engine = realization_engine(seed, realization);
    std::normal_distribution<double> normal(0.0, std::numbers::sqrt2 / 2.0);
    std::vector<cplx> z(weights.size());
    for (std::size_t j = 0; j < z.size(); ++j) {
        const double re = normal(engine);
        const double im = normal(engine);
        z[j] = std::sqrt(weights[j]) * cplx(re, im);
    }
    dft(z, FFTW_BACKWARD);
    const double scale = 1.0 / std::sqrt(static_cast<double>(z.size()));
    z.resize(keep);
    for (auto &v : z)
        v *= scale;
    return z;
}

void put_u64(std::ostream &os, std::uint64_t v)
{
    std::array<char, 8> b{};
    for (int i = 0; i < 8; ++i)
        b[i] = static_cast<char>((v >> (8 * i)) & 0xffu);
    os.write(b.data(), 8);
}

std::uint64_t get_u64(std::istream &is)
{
    std::array<unsigned char, 8> b{};
    is.read(reinterpret_cast<char *>(b.data()), 8);
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i)
        v = (v << 8) | b[i];
    return v;
}

constexpr char kMagic[8] = {'F', 'R', 'P', 'A', 'T', 'H', '\0', '\0'};

// E over standard normal p, q of
// log(1 + Σ_d exp(-γ|d|² - √(2γ)(Re d·p + Im d·q))), d ∈ {1-i, 2, 1+i}.
// Each level integrates (value + 1) against its weight and subtracts the
// weight's mass afterwards, so that the relative tolerance of the adaptive
// rule acts as an absolute one when the expectation itself is tiny.
double conditional_log_sum(double gamma)
{
    using boost::math::quadrature::gauss_kronrod;
    static const std::array<cplx, 3> diffs{cplx(1.0, -1.0), cplx(2.0, 0.0), cplx(1.0, 1.0)};
    const double s = std::sqrt(2.0 * gamma);
    const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    auto inner = [&](double p) {
        auto integrand = [&](double q) {
            std::array<double, 4> e{0.0, 0.0, 0.0, 0.0};
            double top = 0.0;
            for (int j = 0; j < 3; ++j) {
                e[j + 1] = -gamma * std::norm(diffs[j]) - s * (diffs[j].real() * p + diffs[j].imag() * q);
                top = std::max(top, e[j + 1]);
            }
            double sum = 0.0;
            for (double v : e)
                sum += std::exp(v - top);
            return (1.0 + top + std::log(sum)) * inv_sqrt_2pi * std::exp(-0.5 * q * q);
        };
        // Even in q once the 1±i terms are swapped.
        const double half = gauss_kronrod<double, 15>::integrate(integrand, 0.0, 10.0, 15, 1e-8) -
                            0.5 * std::erf(10.0 / std::numbers::sqrt2);
        return (1.0 + 2.0 * half) * inv_sqrt_2pi * std::exp(-0.5 * p * p);
    };
    const double mass = std::erf(10.0 / std::numbers::sqrt2);
    return gauss_kronrod<double, 15>::integrate(inner, -10.0, 0.0, 15, 1e-8) +
           gauss_kronrod<double, 15>::integrate(inner, 0.0, 10.0, 15, 1e-8) - mass;
}

} // namespace

void SimRun::validate() const
{
    if (path_length < 2 || path_length > (std::int64_t{1} << 20) || !std::has_single_bit(static_cast<std::uint64_t>(path_length)))
        throw DomainError("path length must be a power of two between 2 and 2^20, got " +
                          std::to_string(path_length));
    if (realizations < 1)
        throw DomainError("realization count must be positive");
}

std::vector<cplx> circulant_embedding_path(const SimRun &run, int realization)
{
    run.validate();
    const std::size_t n = static_cast<std::size_t>(run.path_length);
    const std::size_t m = 2 * n;
    std::vector<cplx> c(m, 0.0);
    c[0] = spectral::autocovariance(run.model, 0);
    for (std::size_t k = 1; k <= n; ++k)
        c[k] = spectral::autocovariance(run.model, static_cast<long>(k));
    for (std::size_t k = 1; k < n; ++k)
        c[m - k] = std::conj(c[k]);
    dft(c, FFTW_FORWARD);

    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (const auto &v : c) {
        lo = std::min(lo, v.real());
        hi = std::max(hi, v.real());
    }
    if (lo < -1e-10 * hi)
        throw EmbeddingError("circulant embedding has a negative eigenvalue " + std::to_string(lo / hi) +
                                 " (relative to the largest)",
                             lo / hi);
    std::vector<double> w(m);
    for (std::size_t j = 0; j < m; ++j)
        w[j] = std::max(0.0, c[j].real());
    return synthesize(w, run.seed, realization, n);
}

std::vector<cplx> spectral_synthesis_path(const SimRun &run, int realization)
{
    run.validate();
    const std::size_t n = static_cast<std::size_t>(run.path_length);
    const double cell = 1.0 / static_cast<double>(n);
    std::vector<double> w(n);
    const auto &model = run.model;
    for (std::size_t j = 0; j < n; ++j) {
        if (model.is_white()) {
            w[j] = 1.0;
            continue;
        }
        const double f = (j < n / 2 ? static_cast<double>(j) : static_cast<double>(j) - static_cast<double>(n)) * cell;
        const double a = f - 0.5 * cell;
        const double b = f + 0.5 * cell;
        const double inside = std::max(0.0, std::min(b, model.theta()) - std::max(a, -model.theta()));
        w[j] = (model.upsilon() * inside + model.lambda() * (cell - inside)) / cell;
    }
    return synthesize(w, run.seed, realization, n);
}

FadingPath generate_fading_path(const SimRun &run, int realization)
{
    FadingPath out;
    try {
        out.samples = circulant_embedding_path(run, realization);
        out.method = SynthesisMethod::CirculantEmbedding;
    } catch (const EmbeddingError &e) {
        out.min_eigenvalue = e.min_eigenvalue();
        out.samples = spectral_synthesis_path(run, realization);
        out.method = SynthesisMethod::SpectralSynthesis;
    }
    return out;
}

double empirical_prediction_error(const SimRun &run, int memory)
{
    run.validate();
    if (memory < 1)
        throw DomainError("prediction memory must be at least 1");
    if (run.path_length < 100 * static_cast<std::int64_t>(memory))
        throw InsufficientDataError("path length " + std::to_string(run.path_length) +
                                    " is below 100 times the prediction memory " + std::to_string(memory));
    const auto fit = spectral::fit_linear_predictor(run.model, memory);
    const auto &a = fit.coefficients;
    double total = 0.0;
    std::int64_t count = 0;
    for (int r = 0; r < run.realizations; ++r) {
        const auto h = generate_fading_path(run, r).samples;
        for (std::size_t k = static_cast<std::size_t>(memory); k < h.size(); ++k) {
            cplx pred = 0.0;
            for (int j = 1; j <= memory; ++j)
                pred += a[j - 1] * h[k - j];
            total += std::norm(h[k] - pred);
            ++count;
        }
    }
    return total / static_cast<double>(count);
}

double qpsk_mi_quadrature_eta(double eta)
{
    if (!(eta >= 0.0))
        throw DomainError("eta must be nonnegative");
    const double log4 = std::log(4.0);
    if (eta == 0.0)
        return 0.0;
    if (std::isinf(eta))
        return log4;
    using boost::math::quadrature::gauss_kronrod;
    // Integrate over γ = η·w, w ~ Exp(1); f(γ) is below 1e-13 past γ = 64.
    const double upper = std::min(50.0 * eta, 64.0);
    auto outer = [&](double g) { return (1.0 + conditional_log_sum(g)) * std::exp(-g / eta) / eta; };
    double err = 0.0;
    const double mean =
        gauss_kronrod<double, 15>::integrate(outer, 0.0, upper, 10, 1e-7, &err) + std::expm1(-upper / eta);
    if (!(err <= 1e-5))
        throw QuadratureError("QPSK quadrature did not reach 1e-5", err);
    return std::clamp(log4 - mean, 0.0, log4);
}

double qpsk_mi_quadrature(double coherent_gain_var, double residual_var, double amplitude_sq,
                          double extra_noise_var)
{
    if (!(coherent_gain_var >= 0.0) || !(residual_var >= 0.0) || !(extra_noise_var >= 0.0))
        throw DomainError("variances must be nonnegative");
    if (!(amplitude_sq > 0.0))
        throw DomainError("squared amplitude must be positive");
    if (coherent_gain_var == 0.0 && residual_var == 0.0 && extra_noise_var == 0.0)
        throw DomainError("at least one variance must be positive");
    if (coherent_gain_var == 0.0)
        return 0.0;
    const double v = residual_var * amplitude_sq + extra_noise_var;
    if (v == 0.0)
        return std::log(4.0);
    return qpsk_mi_quadrature_eta(coherent_gain_var * amplitude_sq / v);
}

void write_path_dump(const std::string &file, const std::vector<cplx> &samples, std::uint64_t seed)
{
    std::ofstream os(file, std::ios::binary);
    if (!os)
        throw Error("cannot open " + file + " for writing");
    os.write(kMagic, sizeof kMagic);
    const std::uint32_t version = 1;
    for (int i = 0; i < 4; ++i)
        os.put(static_cast<char>((version >> (8 * i)) & 0xffu));
    put_u64(os, samples.size());
    put_u64(os, seed);
    for (const auto &v : samples) {
        put_u64(os, std::bit_cast<std::uint64_t>(v.real()));
        put_u64(os, std::bit_cast<std::uint64_t>(v.imag()));
    }
    if (!os)
        throw Error("write to " + file + " failed");
}

std::vector<cplx> read_path_dump(const std::string &file, std::uint64_t *seed)
{
    std::ifstream is(file, std::ios::binary);
    if (!is)
        throw Error("cannot open " + file);
    char magic[8];
    is.read(magic, sizeof magic);
    if (!is || std::memcmp(magic, kMagic, sizeof kMagic) != 0)
        throw Error(file + " is not a path dump");
    std::array<unsigned char, 4> vb{};
    is.read(reinterpret_cast<char *>(vb.data()), 4);
    const std::uint32_t version = vb[0] | (vb[1] << 8) | (vb[2] << 16) | (std::uint32_t{vb[3]} << 24);
    if (version != 1)
        throw Error(file + ": unsupported path dump version " + std::to_string(version));
    const std::uint64_t length = get_u64(is);
    const std::uint64_t s = get_u64(is);
    if (seed != nullptr)
        *seed = s;
    if (length > (std::uint64_t{1} << 20))
        throw Error(file + ": implausible path length");
    std::vector<cplx> out(length);
    for (auto &v : out) {
        const double re = std::bit_cast<double>(get_u64(is));
        const double im = std::bit_cast<double>(get_u64(is));
        v = cplx(re, im);
    }
    if (!is)
        throw Error(file + ": truncated path dump");
    return out;
}

} // namespace fadingrelay::simlab
