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

#ifndef FADINGRELAY_FADING_NUMBER_HPP
#define FADINGRELAY_FADING_NUMBER_HPP

#include "fadingrelay/spectral.hpp"

#include <string_view>

namespace fadingrelay::fading {

enum class Regime { DirectOptimal, CooperationStrictlyBetter, OneBitGap, Indeterminate };

std::string_view to_string(Regime r) noexcept;

// All values in nats.
struct FadingNumberReport {
    double eps1_sq = 1.0;
    double eps2_sq = 1.0;
    double eps3_sq = 1.0;
    double chi1 = 0.0;
    double chi2 = 0.0;
    double chi3 = 0.0;
    double upper = 0.0;
    double lower = 0.0;
    Regime regime = Regime::Indeterminate;
    bool direct_optimal = false;
    bool cooperation_strictly_better = false;
    bool one_bit_gap = false;
    // max{χ₂, χ₃} - lower
    double gap_to_miso = 0.0;
};

/// χ = -1 - γ + log(1/ε²). Throws DomainError outside (0, 1].
double p2p_fading_number(double eps_sq);

/// Relay-channel upper bound from the three prediction errors.
double relay_upper_bound(double eps1_sq, double eps2_sq, double eps3_sq);
double relay_upper_bound(const spectral::ChannelScenario &s);

/// Decode-and-forward lower bound max{χ₂, χ₃ - log(1 + ε₁²/ε₃²)}.
double relay_lower_bound_df(double eps1_sq, double eps2_sq, double eps3_sq);
double relay_lower_bound_df(const spectral::ChannelScenario &s);

/// χ₃ - log(1 + exp(χ₃ - χ₁)), evaluated without overflow.
double df_one_bit_form(double chi1, double chi3) noexcept;

FadingNumberReport classify_regime(double eps1_sq, double eps2_sq, double eps3_sq);
FadingNumberReport classify_regime(const spectral::ChannelScenario &s);

/// Power split ε₁²/(ε₁² + ε₃²) balancing the two decode-and-forward terms.
double optimal_df_alpha(double eps1_sq, double eps3_sq);

} // namespace fadingrelay::fading

#endif
