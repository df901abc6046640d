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

#ifndef FADINGRELAY_SPECFUN_HPP
#define FADINGRELAY_SPECFUN_HPP

namespace fadingrelay::specfun {

inline constexpr double euler_gamma = 0.577215664901532860606512090082402431;

// Value together with an estimate of its absolute error.
struct SpecialValue {
    double value = 0.0;
    double abs_err_estimate = 0.0;
};

/// Upper incomplete gamma function Γ(a, x) = ∫ₓ^∞ t^{a-1} e^{-t} dt for x > 0.
///
/// Series expansion below x ≈ a + 1, Lentz continued fraction above. Small
/// positive a uses a cancellation-free split of Γ(a) - γ(a, x), so that
/// Γ(a, x) → E₁(x) smoothly as a → 0⁺. Negative a is reached through the
/// downward recurrence Γ(a, x) = (Γ(a+1, x) - x^a e^{-x}) / a for x < 1.
/// Target accuracy is 1e-12 relative for a in (0, 50], x in (0, 700].
///
/// Throws DomainError if x <= 0 and OverflowError if the result or an
/// intermediate term is not representable.
SpecialValue upper_incomplete_gamma_ex(double a, double x);
double upper_incomplete_gamma(double a, double x);

/// log Γ(a, x) for a > 0, x > 0. Stays finite where Γ(a, x) itself underflows.
double log_upper_incomplete_gamma(double a, double x);

/// Exponential integral Ei(-x) = -∫ₓ^∞ e^{-t}/t dt, x > 0. Underflows cleanly
/// to zero for very large x.
SpecialValue expint_ei_neg_ex(double x);
double expint_ei_neg(double x);

/// exp(u)·Ei(-u) for u > 0 without overflow or cancellation. The result lies in
/// (-1/u, -1/(1+u)).
double ei_correction_term(double u);

} // namespace fadingrelay::specfun

#endif
