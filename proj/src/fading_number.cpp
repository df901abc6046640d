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

#include "fadingrelay/fading_number.hpp"

#include "fadingrelay/error.hpp"
#include "fadingrelay/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fadingrelay::fading {
namespace {

constexpr double kMinusOneMinusGamma = -1.0 - specfun::euler_gamma;

void check_eps(double eps_sq, const char *name)
{
    if (!(eps_sq > 0.0 && eps_sq <= 1.0))
        throw DomainError(std::string(name) + " must lie in (0, 1], got " + std::to_string(eps_sq));
}

// log(1 + e^x)
double softplus(double x) noexcept
{
    return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

} // namespace

std::string_view to_string(Regime r) noexcept
{
    switch (r) {
    case Regime::DirectOptimal:
        return "DirectOptimal";
    case Regime::CooperationStrictlyBetter:
        return "CooperationStrictlyBetter";
    case Regime::OneBitGap:
        return "OneBitGap";
    case Regime::Indeterminate:
        break;
    }
    return "Indeterminate";
}

double p2p_fading_number(double eps_sq)
{
    check_eps(eps_sq, "prediction error");
    return kMinusOneMinusGamma - std::log(eps_sq);
}

double relay_upper_bound(double eps1_sq, double eps2_sq, double eps3_sq)
{
    check_eps(eps1_sq, "eps1_sq");
    const double joint = -2.0 * specfun::euler_gamma - std::log(eps1_sq) - std::log(eps2_sq);
    const double miso = std::max(p2p_fading_number(eps2_sq), p2p_fading_number(eps3_sq));
    return std::min(joint, miso);
}

double relay_upper_bound(const spectral::ChannelScenario &s)
{
    return relay_upper_bound(spectral::prediction_error(s.link1), spectral::prediction_error(s.link2),
                             spectral::prediction_error(s.link3));
}

double relay_lower_bound_df(double eps1_sq, double eps2_sq, double eps3_sq)
{
    check_eps(eps1_sq, "eps1_sq");
    const double relayed = p2p_fading_number(eps3_sq) - std::log1p(eps1_sq / eps3_sq);
    return std::max(p2p_fading_number(eps2_sq), relayed);
}

double relay_lower_bound_df(const spectral::ChannelScenario &s)
{
    return relay_lower_bound_df(spectral::prediction_error(s.link1), spectral::prediction_error(s.link2),
                                spectral::prediction_error(s.link3));
}

double df_one_bit_form(double chi1, double chi3) noexcept
{
    return chi3 - softplus(chi3 - chi1);
}

FadingNumberReport classify_regime(double eps1_sq, double eps2_sq, double eps3_sq)
{
    FadingNumberReport r;
    r.eps1_sq = eps1_sq;
    r.eps2_sq = eps2_sq;
    r.eps3_sq = eps3_sq;
    r.chi1 = p2p_fading_number(eps1_sq);
    r.chi2 = p2p_fading_number(eps2_sq);
    r.chi3 = p2p_fading_number(eps3_sq);
    r.upper = relay_upper_bound(eps1_sq, eps2_sq, eps3_sq);
    r.lower = relay_lower_bound_df(eps1_sq, eps2_sq, eps3_sq);
    r.direct_optimal = eps2_sq <= eps3_sq;
    r.cooperation_strictly_better = eps2_sq > eps1_sq + eps3_sq;
    r.one_bit_gap = eps1_sq <= eps3_sq;
    if (r.direct_optimal) {
        r.regime = Regime::DirectOptimal;
        r.upper = r.lower = r.chi2;
    } else if (r.cooperation_strictly_better) {
        r.regime = Regime::CooperationStrictlyBetter;
    } else if (r.one_bit_gap) {
        r.regime = Regime::OneBitGap;
    } else {
        r.regime = Regime::Indeterminate;
    }
    r.gap_to_miso = std::max(0.0, std::max(r.chi2, r.chi3) - r.lower);
    return r;
}

FadingNumberReport classify_regime(const spectral::ChannelScenario &s)
{
    return classify_regime(spectral::prediction_error(s.link1), spectral::prediction_error(s.link2),
                           spectral::prediction_error(s.link3));
}

double optimal_df_alpha(double eps1_sq, double eps3_sq)
{
    check_eps(eps1_sq, "eps1_sq");
    check_eps(eps3_sq, "eps3_sq");
    return eps1_sq / (eps1_sq + eps3_sq);
}

} // namespace fadingrelay::fading
