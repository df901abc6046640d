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

#ifndef FADINGRELAY_SPECTRAL_HPP
#define FADINGRELAY_SPECTRAL_HPP

#include <complex>
#include <vector>

namespace fadingrelay::spectral {

enum class SpectrumKind { White, PiecewiseConstant };

/// Unit-variance spectral density on [-1/2, 1/2]. The piecewise-constant
/// family has level Υ on |λ| <= Θ and Λ elsewhere, with 2ΥΘ + (1-2Θ)Λ = 1.
/// Instances are immutable once constructed.
class SpectralModel {
public:
    static SpectralModel white();

    /// Throws DomainError unless Υ > Λ > 0, Θ ∈ (0, 1/2) and the unit-variance
    /// constraint holds within 1e-9.
    static SpectralModel piecewise(double upsilon, double lambda, double theta);

    SpectrumKind kind() const noexcept { return kind_; }
    bool is_white() const noexcept { return kind_ == SpectrumKind::White; }
    double upsilon() const noexcept { return upsilon_; }
    double lambda() const noexcept { return lambda_; }
    double theta() const noexcept { return theta_; }

    // F'(λ) for λ in [-1/2, 1/2]
    double density(double freq) const noexcept;

private:
    SpectralModel(SpectrumKind kind, double upsilon, double lambda, double theta)
        : kind_(kind), upsilon_(upsilon), lambda_(lambda), theta_(theta) {}

    SpectrumKind kind_;
    double upsilon_;
    double lambda_;
    double theta_;
};

/// Which pair of links feeds the low-SNR QPSK bound of the cooperative MISO
/// channel.
enum class MisoQpskLinks { Links13, Links23 };

/// One relay-channel instance: tx→relay (link1), tx→rx (link2) and
/// relay→rx (link3) fading laws, amplitude ratio ρ = A/A_r and noise
/// variance σ².
struct ChannelScenario {
    SpectralModel link1 = SpectralModel::white();
    SpectralModel link2 = SpectralModel::white();
    SpectralModel link3 = SpectralModel::white();
    double rho = 1.0;
    double sigma_sq = 1.0;
    MisoQpskLinks miso_qpsk_links = MisoQpskLinks::Links13;

    // Throws DomainError when ρ or σ² is not strictly positive and finite.
    void validate() const;
};

/// Piecewise model with ε² = target_eps_sq and out-of-band level Λ. Unit
/// variance and the ε² target fix both Υ and Θ; the supplied band edge acts
/// as a consistency check and must agree with the solution to 1% relative.
/// Throws InfeasibleError otherwise, or when the target is not in (Λ, 1).
SpectralModel make_piecewise(double target_eps_sq, double lambda, double theta);

/// ε² = exp(∫ log F'(λ) dλ)
double prediction_error(const SpectralModel &m);

/// ∫ log(F'(λ) + c) dλ over [-1/2, 1/2], closed form, c >= 0.
double log_integral(const SpectralModel &m, double c);

/// Noisy prediction error exp(∫ log(F' + ξ)) - ξ. Lies in [ε², 1].
double noisy_prediction_error(const SpectralModel &m, double xi);

/// r(m) = ∫ e^{i2πmλ} F'(λ) dλ, |m| <= 1e6.
std::complex<double> autocovariance(const SpectralModel &m, long lag);

/// Smallest positive lag at which |r(m)| drops below one half.
long coherence_time(const SpectralModel &m);

struct PredictorFit {
    // Ĥ₀ = Σ_j coefficients[j-1] H_{-j}
    std::vector<std::complex<double>> coefficients;
    // mse_by_order[p] is the error with p past samples; mse_by_order[0] = r(0).
    std::vector<double> mse_by_order;
    double condition_estimate = 1.0;
};

/// Levinson-Durbin fit of the order-κ one-step predictor. Falls back to a
/// dense solve when a reflection coefficient approaches the unit circle.
/// Throws IllConditionedError when the condition estimate exceeds 1e6.
PredictorFit fit_linear_predictor(const SpectralModel &m, int memory);

/// MMSE of predicting H₀ from H₋₁, ..., H₋κ.
double finite_memory_prediction_error(const SpectralModel &m, int memory);

} // namespace fadingrelay::spectral

#endif
