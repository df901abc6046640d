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

#ifndef FADINGRELAY_CAPACITY_BOUNDS_HPP
#define FADINGRELAY_CAPACITY_BOUNDS_HPP

#include "fadingrelay/search.hpp"
#include "fadingrelay/spectral.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fadingrelay::bounds {

enum class BoundId { DirectUpper, RelayMisoUpper, DfLower, MisoBeamSelectLower, MisoQpskLower, DfQpskLower };

std::string_view to_string(BoundId id) noexcept;

/// One optimized bound at one SNR. Lower bounds report max(0, raw); the raw
/// optimum is kept in raw_value and in the "raw_value" diagnostic.
struct BoundPoint {
    BoundId bound_id = BoundId::DirectUpper;
    double snr = 0.0;
    double value_nats = 0.0;
    double raw_value = 0.0;
    std::int64_t evals = 0;
    std::vector<std::pair<std::string, double>> optimizer_args;

    // Diagnostic by name; throws std::out_of_range if absent.
    double arg(std::string_view name) const;
};

struct DfRates {
    double r_tr = 0.0;
    double r_rr = 0.0;
};

/// Upper-bound objective for the memoryless point-to-point channel. Every
/// α, β, δ > 0 gives a valid upper bound on its capacity at this SNR.
double c_iid_upper_objective(double snr, double alpha, double beta, double delta);

/// Infimum of c_iid_upper_objective over α ∈ [1e-3, 5], β ∈ [1e-2, 1e4(snr+1)]
/// and δ ∈ [1e-4, 50], with β and δ on log grids.
BoundPoint c_iid_upper(double snr, const search::SearchConfig &cfg = {});

/// Upper bound valid for both the relay channel and its cooperative MISO
/// counterpart. Needs a memoryless tx→rx link (PreconditionError otherwise).
BoundPoint relay_miso_upper(const spectral::ChannelScenario &s, double snr, const search::SearchConfig &cfg = {});

/// Transmitter→relay and relay→receiver rates of the decode-and-forward
/// scheme for a power split α, detection thresholds δ and δ_r, all in (0, 1).
DfRates df_lower_objective(const spectral::ChannelScenario &s, double snr, double delta, double alpha,
                           double delta_r);

/// Same as df_lower_objective with δ = exp(-t/2) and δ_r = exp(-t_r/2), so
/// that thresholds extremely close to zero or one stay representable.
DfRates df_lower_objective_log(const spectral::ChannelScenario &s, double snr, double t, double alpha, double t_r);

/// sup of min(r_tr, r_rr). Searches t, t_r on log grids over
/// [2e-6, max(64, 4|log snr|)] and α on a log grid over [1e-6, 1 - 1e-6].
BoundPoint df_lower(const spectral::ChannelScenario &s, double snr, const search::SearchConfig &cfg = {});

/// Rate of the single-antenna scheme on link ℓ ∈ {2, 3} at total power
/// snr(1+ρ²), with δ = exp(-t/2).
double beam_select_rate_log(const spectral::SpectralModel &link, double snr, double rho, double t);
double beam_select_rate(const spectral::SpectralModel &link, double snr, double rho, double delta);

/// sup over δ of max(R₂, R₃) under the sum-amplitude constraint.
BoundPoint miso_beam_select_lower(const spectral::ChannelScenario &s, double snr,
                                  const search::SearchConfig &cfg = {});

} // namespace fadingrelay::bounds

#endif
