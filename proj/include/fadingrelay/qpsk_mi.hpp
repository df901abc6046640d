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

#ifndef FADINGRELAY_QPSK_MI_HPP
#define FADINGRELAY_QPSK_MI_HPP

#include "fadingrelay/spectral.hpp"

#include <cstdint>
#include <vector>

namespace fadingrelay::qpsk {

struct McConfig {
    std::uint64_t seed = 1;
    std::int64_t samples = 100'000;
    // When the estimate's standard error exceeds this, the sample count is
    // doubled, at most four times.
    double target_se = 0.01;

    // Throws DomainError unless samples >= 1e4 and target_se > 0.
    void validate() const;
};

struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::int64_t samples_used = 0;
};

/// Samples per independently seeded block. Block b draws from a generator
/// seeded with (seed, b) and block sums are reduced in block order.
inline constexpr std::int64_t kBlockSize = 4096;

/// Mutual information between a uniform QPSK input of squared modulus a²
/// and Y = (H̄ + H̃)X + N given H̄, with H̄ ~ CN(0, s̄²), H̃ ~ CN(0, ε̃²),
/// N ~ CN(0, v₀). Depends on the parameters only through
/// η = s̄²a² / (ε̃²a² + v₀). Monte Carlo, stratified over the four symbols.
McEstimate qpsk_mixture_mi(double coherent_gain_var, double residual_var, double amplitude_sq,
                           double extra_noise_var, const McConfig &mc);

/// The same kernel parametrized directly by η >= 0.
McEstimate qpsk_mi_eta(double eta, const McConfig &mc);

/// Low-SNR QPSK lower bound for the cooperative MISO channel, using the
/// link pair selected by s.miso_qpsk_links.
McEstimate miso_qpsk_lower(const spectral::ChannelScenario &s, double snr, const McConfig &mc);

/// Default δ grid: 16 log-spaced points on [1e-3, 1].
std::vector<double> default_delta_grid();

struct DfQpskEstimate {
    McEstimate estimate;
    double best_delta = 0.0;
    std::vector<double> delta_grid;
};

/// Low-SNR decode-and-forward QPSK bound, maximized over a fixed δ grid.
/// Requires a memoryless tx→rx link.
DfQpskEstimate df_qpsk_lower(const spectral::ChannelScenario &s, double snr, const McConfig &mc,
                             const std::vector<double> &delta_grid = default_delta_grid());

} // namespace fadingrelay::qpsk

#endif
