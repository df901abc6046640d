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

#include "fadingrelay/capacity_bounds.hpp"

#include "fadingrelay/error.hpp"
#include "fadingrelay/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace fadingrelay::bounds {
namespace {

using search::Direction;
using search::Interval;
using search::Scale;

// log(1 + e^x)
double softplus(double x) noexcept
{
    return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

void check_snr(double snr)
{
    if (!(snr > 0.0) || !std::isfinite(snr))
        throw DomainError("snr must be positive and finite, got " + std::to_string(snr));
}

void require_memoryless_direct_link(const spectral::ChannelScenario &s)
{
    if (!s.link2.is_white())
        throw PreconditionError("this bound requires a memoryless transmitter-to-receiver link");
}

double threshold_upper(double snr)
{
    return std::max(64.0, 4.0 * std::abs(std::log(snr)));
}

BoundPoint make_lower(BoundId id, double snr, const search::SearchResult &r)
{
    BoundPoint p;
    p.bound_id = id;
    p.snr = snr;
    p.raw_value = r.value;
    p.value_nats = std::max(0.0, r.value);
    p.evals = r.evals;
    return p;
}

} // namespace

std::string_view to_string(BoundId id) noexcept
{
    switch (id) {
    case BoundId::DirectUpper:
        return "direct_upper";
    case BoundId::RelayMisoUpper:
        return "relay_miso_upper";
    case BoundId::DfLower:
        return "df_lower";
    case BoundId::MisoBeamSelectLower:
        return "miso_beamselect_lower";
    case BoundId::MisoQpskLower:
        return "miso_qpsk_lower";
    case BoundId::DfQpskLower:
        break;
    }
    return "df_qpsk_lower";
}

double BoundPoint::arg(std::string_view name) const
{
    for (const auto &[key, value] : optimizer_args)
        if (key == name)
            return value;
    throw std::out_of_range("no diagnostic named " + std::string(name));
}

double c_iid_upper_objective(double snr, double alpha, double beta, double delta)
{
    check_snr(snr);
    if (!(alpha > 0.0) || !(beta > 0.0) || !(delta > 0.0))
        throw DomainError("alpha, beta and delta must be positive");
    return -1.0 + alpha * std::log(beta / delta) + specfun::log_upper_incomplete_gamma(alpha, delta / beta) +
           std::log(delta) - (1.0 - alpha) * specfun::ei_correction_term(delta) + (snr + 1.0) / beta +
           delta / beta;
}

BoundPoint c_iid_upper(double snr, const search::SearchConfig &cfg)
{
    check_snr(snr);
    const std::array<Interval, 3> box{{{1e-3, 5.0, Scale::Linear},
                                       {1e-2, 1e4 * (snr + 1.0), Scale::Log},
                                       {1e-4, 50.0, Scale::Log}}};
    auto f = [snr](std::span<const double> x) { return c_iid_upper_objective(snr, x[0], x[1], x[2]); };
    const auto r = search::optimize_box(f, box, Direction::Min, cfg);
    BoundPoint p;
    p.bound_id = BoundId::DirectUpper;
    p.snr = snr;
    p.value_nats = p.raw_value = r.value;
    p.evals = r.evals;
    p.optimizer_args = {{"alpha", r.arg[0]},
                        {"beta", r.arg[1]},
                        {"delta", r.arg[2]},
                        {"raw_value", r.value},
                        {"box_alpha_lo", box[0].lo},
                        {"box_alpha_hi", box[0].hi},
                        {"box_beta_lo", box[1].lo},
                        {"box_beta_hi", box[1].hi},
                        {"box_delta_lo", box[2].lo},
                        {"box_delta_hi", box[2].hi}};
    return p;
}

BoundPoint relay_miso_upper(const spectral::ChannelScenario &s, double snr, const search::SearchConfig &cfg)
{
    check_snr(snr);
    s.validate();
    require_memoryless_direct_link(s);
    const double gain = 1.0 + s.rho * s.rho;
    const double xi = 1.0 / (gain * snr);
    BoundPoint p = c_iid_upper(snr * gain, cfg);
    const double correction =
        s.link3.is_white() ? 0.0 : std::log1p(xi) - spectral::log_integral(s.link3, xi);
    p.bound_id = BoundId::RelayMisoUpper;
    p.snr = snr;
    p.value_nats = p.raw_value = p.value_nats + correction;
    for (auto &[key, value] : p.optimizer_args)
        if (key == "raw_value")
            value = p.raw_value;
    p.optimizer_args.emplace_back("memory_correction", correction);
    return p;
}

DfRates df_lower_objective_log(const spectral::ChannelScenario &s, double snr, double t, double alpha, double t_r)
{
    check_snr(snr);
    if (!(t > 0.0) || !(t_r > 0.0) || !std::isfinite(t) || !std::isfinite(t_r))
        throw DomainError("detection thresholds must lie strictly inside (0, 1)");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("power split must lie strictly inside (0, 1)");
    const double L = std::log(snr);
    const double ls = std::log(s.sigma_sq);
    const double log_delta = -0.5 * t;
    const double log_delta_r = -0.5 * t_r;
    const double log_rho_sq = 2.0 * std::log(s.rho);

    DfRates r;
    const double log_c1 = (1.0 - alpha) * ls - alpha * log_delta - alpha * L;
    const double c_in = std::exp((1.0 - alpha) * ls - 2.0 * alpha * log_delta - alpha * L);
    const double u_tr = std::exp((1.0 - alpha) * ls + 1.0 - std::log(alpha) - std::log(t) - alpha * log_delta - alpha * L);
    r.r_tr = log_c1 - spectral::log_integral(s.link1, c_in) - specfun::ei_correction_term(u_tr);

    const double log_p = -(specfun::euler_gamma + 1.0) + std::log(alpha) + std::log(t) + alpha * log_delta +
                         alpha * L + (alpha - 1.0) * ls;
    const double sp = softplus(log_p);
    const double first = sp - log_delta_r - log_rho_sq - L;
    const double shift = std::exp((alpha - 1.0) * ls - 2.0 * log_delta_r - log_rho_sq - (1.0 - alpha) * L) +
                         std::exp(-2.0 * log_delta_r - log_rho_sq - L);
    const double u_rr = std::exp(1.0 + sp - std::log(t_r) - log_delta_r - log_rho_sq - L);
    r.r_rr = first - spectral::log_integral(s.link3, shift) - specfun::ei_correction_term(u_rr);
    return r;
}

DfRates df_lower_objective(const spectral::ChannelScenario &s, double snr, double delta, double alpha, double delta_r)
{
    if (!(delta > 0.0 && delta < 1.0) || !(delta_r > 0.0 && delta_r < 1.0))
        throw DomainError("detection thresholds must lie strictly inside (0, 1)");
    return df_lower_objective_log(s, snr, -2.0 * std::log(delta), alpha, -2.0 * std::log(delta_r));
}

BoundPoint df_lower(const spectral::ChannelScenario &s, double snr, const search::SearchConfig &cfg)
{
    check_snr(snr);
    s.validate();
    require_memoryless_direct_link(s);
    const double t_hi = threshold_upper(snr);
    const std::array<Interval, 3> box{
        {{2e-6, t_hi, Scale::Log}, {1e-6, 1.0 - 1e-6, Scale::Log}, {2e-6, t_hi, Scale::Log}}};
    auto f = [&](std::span<const double> x) {
        const DfRates r = df_lower_objective_log(s, snr, x[0], x[1], x[2]);
        return std::min(r.r_tr, r.r_rr);
    };
    const auto r = search::optimize_box(f, box, Direction::Max, cfg);
    BoundPoint p = make_lower(BoundId::DfLower, snr, r);
    const DfRates at = df_lower_objective_log(s, snr, r.arg[0], r.arg[1], r.arg[2]);
    p.optimizer_args = {{"delta", std::exp(-0.5 * r.arg[0])},
                        {"alpha", r.arg[1]},
                        {"delta_r", std::exp(-0.5 * r.arg[2])},
                        {"t", r.arg[0]},
                        {"t_r", r.arg[2]},
                        {"r_tr", at.r_tr},
                        {"r_rr", at.r_rr},
                        {"raw_value", r.value}};
    return p;
}

double beam_select_rate_log(const spectral::SpectralModel &link, double snr, double rho, double t)
{
    check_snr(snr);
    if (!(t > 0.0) || !std::isfinite(t))
        throw DomainError("detection threshold must lie strictly inside (0, 1)");
    const double log_power = std::log(snr) + std::log1p(rho * rho);
    const double log_delta = -0.5 * t;
    const double c = std::exp(-2.0 * log_delta - log_power);
    const double u = std::exp(1.0 - std::log(t) - log_delta - log_power);
    return -log_delta - log_power - spectral::log_integral(link, c) - specfun::ei_correction_term(u);
}

double beam_select_rate(const spectral::SpectralModel &link, double snr, double rho, double delta)
{
    if (!(delta > 0.0 && delta < 1.0))
        throw DomainError("detection threshold must lie strictly inside (0, 1)");
    return beam_select_rate_log(link, snr, rho, -2.0 * std::log(delta));
}

BoundPoint miso_beam_select_lower(const spectral::ChannelScenario &s, double snr, const search::SearchConfig &cfg)
{
    check_snr(snr);
    s.validate();
    const std::array<Interval, 1> box{{{2e-6, threshold_upper(snr), Scale::Log}}};
    auto f = [&](std::span<const double> x) {
        return std::max(beam_select_rate_log(s.link2, snr, s.rho, x[0]),
                        beam_select_rate_log(s.link3, snr, s.rho, x[0]));
    };
    const auto r = search::optimize_box(f, box, Direction::Max, cfg);
    BoundPoint p = make_lower(BoundId::MisoBeamSelectLower, snr, r);
    const double r2 = beam_select_rate_log(s.link2, snr, s.rho, r.arg[0]);
    const double r3 = beam_select_rate_log(s.link3, snr, s.rho, r.arg[0]);
    p.optimizer_args = {{"delta", std::exp(-0.5 * r.arg[0])},
                        {"t", r.arg[0]},
                        {"r2", r2},
                        {"r3", r3},
                        {"raw_value", r.value}};
    return p;
}

} // namespace fadingrelay::bounds
