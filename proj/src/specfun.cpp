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

#include "fadingrelay/specfun.hpp"

#include "fadingrelay/error.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>

namespace fadingrelay::specfun {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr int kMaxIter = 100000;
// log(DBL_MAX), rounded down
constexpr double kLogMax = 709.78;

std::string describe(const char *what, double a, double x)
{
    std::ostringstream os;
    os.precision(17);
    os << what << " (a = " << a << ", x = " << x << ")";
    return os.str();
}

// ζ(k) - 1 for k = 0..kZetaTerms-1 (entries 0 and 1 unused). Direct sum up to
// N - 1 plus an Euler-Maclaurin tail starting at N.
constexpr int kZetaTerms = 48;

std::array<double, kZetaTerms> make_zeta_minus_one()
{
    std::array<double, kZetaTerms> z{};
    constexpr double N = 64.0;
    for (int k = 2; k < kZetaTerms; ++k) {
        const double kk = k;
        double sum = 0.0;
        for (int n = 63; n >= 2; --n) // small terms first
            sum += std::pow(static_cast<double>(n), -kk);
        const double tail = std::pow(N, 1.0 - kk) / (kk - 1.0) + 0.5 * std::pow(N, -kk) +
                            kk * std::pow(N, -kk - 1.0) / 12.0 -
                            kk * (kk + 1.0) * (kk + 2.0) * std::pow(N, -kk - 3.0) / 720.0 +
                            kk * (kk + 1.0) * (kk + 2.0) * (kk + 3.0) * (kk + 4.0) *
                                std::pow(N, -kk - 5.0) / 30240.0;
        z[k] = sum + tail;
    }
    return z;
}

const std::array<double, kZetaTerms> &zeta_minus_one()
{
    static const std::array<double, kZetaTerms> table = make_zeta_minus_one();
    return table;
}

// log Γ(1 + a) for |a| <= 0.5, accurate in the relative sense as a → 0.
double lgamma1p_small(double a)
{
    const auto &zm1 = zeta_minus_one();
    double sum = 0.0;
    double power = a; // a^k
    for (int k = 2; k < kZetaTerms; ++k) {
        power *= a;
        const double term = ((k % 2 == 0) ? 1.0 : -1.0) * zm1[k] * power / k;
        sum += term;
        if (std::abs(term) <= kEps * std::abs(sum) * 0.1)
            break;
    }
    return -euler_gamma * a + (a - std::log1p(a)) + sum;
}

// (Γ(1 + a) - 1) / a for 0 < a <= 0.5
double gamma1pm1_over_a(double a)
{
    return std::expm1(lgamma1p_small(a)) / a;
}

// Modified Lentz evaluation of the continued fraction
//   Γ(a, x) = e^{-x} x^a / (x + 1 - a - 1·(1-a)/(x + 3 - a - ...)).
// Returns the fraction only; *iterations receives the number of terms.
double gamma_cf(double a, double x, int *iterations)
{
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    int i = 1;
    for (; i <= kMaxIter; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kTiny)
            d = kTiny;
        c = b + an / c;
        if (std::abs(c) < kTiny)
            c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) <= kEps)
            break;
    }
    if (i > kMaxIter)
        throw DomainError(describe("incomplete gamma continued fraction did not converge", a, x));
    *iterations = i;
    return h;
}

// Regularized lower series P(a, x) for a >= 0.5, x < a + 1.
double gamma_p_series(double a, double x, int *iterations)
{
    double term = 1.0;
    double sum = 1.0;
    int n = 1;
    for (; n <= kMaxIter; ++n) {
        term *= x / (a + n);
        sum += term;
        if (std::abs(term) < std::abs(sum) * kEps)
            break;
    }
    *iterations = n;
    return std::exp(a * std::log(x) - x - std::lgamma(a + 1.0)) * sum;
}

// Γ(a, x) for 0 < a < 0.5, x < a + 1:
//   (Γ(1+a) - 1)/a - (x^a - 1)/a - x^a Σ_{k>=1} (-x)^k / (k! (a + k)).
SpecialValue gamma_small_a(double a, double x)
{
    const double lx = std::log(x);
    const double xa = std::exp(a * lx);
    const double g = gamma1pm1_over_a(a);
    const double xam1 = std::expm1(a * lx) / a;
    double t = 1.0;
    double s = 0.0;
    double s_abs = 0.0;
    for (int k = 1; k <= kMaxIter; ++k) {
        t *= -x / k;
        const double term = t / (a + k);
        s += term;
        s_abs += std::abs(term);
        if (std::abs(term) < kEps * std::abs(s))
            break;
    }
    const double value = g - xam1 - xa * s;
    const double scale = std::abs(g) + std::abs(xam1) + xa * s_abs;
    return {value, 8.0 * kEps * scale};
}

SpecialValue gamma_positive(double a, double x)
{
    if (x >= a + 1.0) {
        int iters = 0;
        const double h = gamma_cf(a, x, &iters);
        const double log_value = -x + a * std::log(x) + std::log(h);
        if (log_value > kLogMax)
            throw OverflowError(describe("incomplete gamma overflows", a, x));
        const double value = std::exp(log_value);
        return {value, (4.0 + iters + x + std::abs(a * std::log(x))) * kEps * value};
    }
    if (a < 0.5)
        return gamma_small_a(a, x);
    const double ga = std::tgamma(a);
    if (!std::isfinite(ga))
        throw OverflowError(describe("incomplete gamma overflows", a, x));
    int iters = 0;
    const double p = gamma_p_series(a, x, &iters);
    const double value = ga * (1.0 - p);
    return {value, (8.0 + iters) * kEps * ga};
}

double e1_series(double x, double *abs_sum)
{
    double t = 1.0;
    double s = 0.0;
    double s_abs = 0.0;
    for (int k = 1; k <= kMaxIter; ++k) {
        t *= -x / k;
        const double term = t / k;
        s += term;
        s_abs += std::abs(term);
        if (std::abs(term) < kEps * std::abs(s))
            break;
    }
    const double lx = std::log(x);
    *abs_sum = euler_gamma + std::abs(lx) + s_abs;
    return -euler_gamma - lx - s;
}

// e^x E₁(x) for x > 1
double e1_scaled_cf(double x)
{
    double b = x + 1.0;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) <= kEps)
            return h;
    }
    throw DomainError(describe("exponential integral continued fraction did not converge", 0.0, x));
}

SpecialValue e1(double x)
{
    if (x <= 1.0) {
        double scale = 0.0;
        const double v = e1_series(x, &scale);
        return {v, 8.0 * kEps * scale};
    }
    const double v = std::exp(-x) * e1_scaled_cf(x);
    return {v, 16.0 * kEps * v};
}

} // namespace

SpecialValue upper_incomplete_gamma_ex(double a, double x)
{
    if (!(x > 0.0) || std::isnan(a))
        throw DomainError(describe("upper incomplete gamma requires x > 0", a, x));
    if (a > 0.0)
        return gamma_positive(a, x);
    if (a == 0.0)
        return e1(x);
    if (x >= 1.0) {
        int iters = 0;
        const double h = gamma_cf(a, x, &iters);
        const double value = std::exp(-x + a * std::log(x)) * h;
        return {value, (4.0 + iters) * kEps * value};
    }
    // a < 0, x < 1: step down from a0 = a + n in [0, 1).
    const double n = std::ceil(-a);
    const double a0 = a + n;
    SpecialValue g = (a0 == 0.0) ? e1(x) : gamma_positive(a0, x);
    const double lx = std::log(x);
    for (double b = a0 - 1.0; b >= a - 0.5; b -= 1.0) {
        const double log_term = b * lx - x;
        if (log_term > kLogMax)
            throw OverflowError(describe("incomplete gamma recurrence overflows", a, x));
        const double term = std::exp(log_term);
        g.value = (g.value - term) / b;
        g.abs_err_estimate = (g.abs_err_estimate + kEps * term) / std::abs(b) + kEps * std::abs(g.value);
    }
    if (!std::isfinite(g.value))
        throw OverflowError(describe("incomplete gamma overflows", a, x));
    return g;
}

double upper_incomplete_gamma(double a, double x)
{
    return upper_incomplete_gamma_ex(a, x).value;
}

double log_upper_incomplete_gamma(double a, double x)
{
    if (!(x > 0.0) || !(a > 0.0))
        throw DomainError(describe("log upper incomplete gamma requires a > 0, x > 0", a, x));
    if (x >= a + 1.0) {
        int iters = 0;
        return -x + a * std::log(x) + std::log(gamma_cf(a, x, &iters));
    }
    if (a < 0.5)
        return std::log(gamma_small_a(a, x).value);
    int iters = 0;
    return std::lgamma(a) + std::log1p(-gamma_p_series(a, x, &iters));
}

SpecialValue expint_ei_neg_ex(double x)
{
    if (!(x > 0.0))
        throw DomainError(describe("Ei(-x) requires x > 0", 0.0, x));
    const SpecialValue v = e1(x);
    return {-v.value, v.abs_err_estimate};
}

double expint_ei_neg(double x)
{
    return expint_ei_neg_ex(x).value;
}

double ei_correction_term(double u)
{
    if (!(u > 0.0))
        throw DomainError(describe("exp(u) Ei(-u) requires u > 0", 0.0, u));
    if (std::isinf(u))
        return -0.0;
    if (u <= 1.0) {
        double scale = 0.0;
        return -std::exp(u) * e1_series(u, &scale);
    }
    return -e1_scaled_cf(u);
}

} // namespace fadingrelay::specfun
