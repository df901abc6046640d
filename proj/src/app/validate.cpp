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

#include "fadingrelay/app/validate.hpp"

#include "fadingrelay/qpsk_mi.hpp"
#include "fadingrelay/simlab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

namespace fadingrelay::app {
namespace {

constexpr double kPredictionRelTol = 0.05;
constexpr double kWhiteRelTol = 0.02;

void add_prediction_checks(ValidationReport &out, const spectral::SpectralModel &model, const char *link,
                           std::uint64_t seed, ValidationLevel level)
{
    simlab::SimRun run;
    run.model = model;
    run.seed = seed;
    run.path_length = level == ValidationLevel::Full ? (1 << 18) : (1 << 16);
    std::vector<int> orders{2, 8, 32};
    if (level == ValidationLevel::Full)
        orders.push_back(64);
    const double rel = model.is_white() ? kWhiteRelTol : kPredictionRelTol;
    for (const int k : orders) {
        ValidationCheck c;
        c.name = std::string(link) + " prediction error, memory " + std::to_string(k);
        c.analytic = spectral::finite_memory_prediction_error(model, k);
        c.empirical = simlab::empirical_prediction_error(run, k);
        c.tolerance = rel * c.analytic;
        c.passed = std::abs(c.empirical - c.analytic) <= c.tolerance;
        out.checks.push_back(std::move(c));
    }
}

void add_qpsk_checks(ValidationReport &out, std::uint64_t seed, ValidationLevel level)
{
    const int sets = level == ValidationLevel::Full ? 10 : 4;
    qpsk::McConfig mc;
    mc.seed = seed;
    mc.samples = level == ValidationLevel::Full ? 1'000'000 : 100'000;
    mc.target_se = 1.0;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> log_eta(std::log(0.05), std::log(50.0));
    std::uniform_real_distribution<double> unit(0.1, 2.0);
    for (int i = 0; i < sets; ++i) {
        // Random physical parameters rescaled so that η lands in [0.05, 50],
        // where the Monte Carlo error is not negligible against quadrature.
        const double eta = std::exp(log_eta(rng));
        const double residual = unit(rng);
        const double amp = unit(rng);
        const double noise = unit(rng);
        const double gain = eta * (residual * amp + noise) / amp;

        ValidationCheck c;
        char name[96];
        std::snprintf(name, sizeof name, "qpsk kernel, eta %.4g", eta);
        c.name = name;
        c.analytic = simlab::qpsk_mi_quadrature(gain, residual, amp, noise);
        const auto est = qpsk::qpsk_mixture_mi(gain, residual, amp, noise, mc);
        c.empirical = est.value;
        c.tolerance = 3.0 * est.std_error;
        c.passed = std::abs(c.empirical - c.analytic) <= c.tolerance;
        out.checks.push_back(std::move(c));
    }
}

} // namespace

bool ValidationReport::all_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck &c) { return c.passed; });
}

ValidationReport run_validation(const spectral::ChannelScenario &s, std::uint64_t seed, ValidationLevel level)
{
    s.validate();
    ValidationReport out;
    add_prediction_checks(out, s.link1, "link1", seed, level);
    add_prediction_checks(out, s.link2, "link2", seed + 1, level);
    add_prediction_checks(out, s.link3, "link3", seed + 2, level);
    add_qpsk_checks(out, seed, level);
    return out;
}

std::string render_validation(const ValidationReport &report)
{
    std::string out;
    char line[256];
    std::snprintf(line, sizeof line, "%-36s %16s %16s %12s  %s\n", "check", "analytic", "empirical", "tolerance",
                  "result");
    out += line;
    for (const auto &c : report.checks) {
        std::snprintf(line, sizeof line, "%-36s %16.9g %16.9g %12.3g  %s\n", c.name.c_str(), c.analytic,
                      c.empirical, c.tolerance, c.passed ? "pass" : "FAIL");
        out += line;
    }
    const auto failed = std::count_if(report.checks.begin(), report.checks.end(),
                                      [](const ValidationCheck &c) { return !c.passed; });
    std::snprintf(line, sizeof line, "%zu checks, %td failed\n", report.checks.size(), failed);
    out += line;
    return out;
}

} // namespace fadingrelay::app
