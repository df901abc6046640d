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

#include "fadingrelay/search.hpp"

#include "fadingrelay/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fadingrelay::search {
namespace {

double to_internal(double v, Scale s)
{
    return s == Scale::Log ? std::log(v) : v;
}

double to_external(double u, Scale s)
{
    return s == Scale::Log ? std::exp(u) : u;
}

bool better(double candidate, double incumbent, Direction d)
{
    return d == Direction::Max ? candidate > incumbent : candidate < incumbent;
}

} // namespace

void SearchConfig::validate() const
{
    if (coarse_points_per_dim < 8)
        throw DomainError("coarse_points_per_dim must be at least 8");
    if (refinement_rounds < 1)
        throw DomainError("refinement_rounds must be at least 1");
    if (!(shrink_factor > 0.0 && shrink_factor < 1.0))
        throw DomainError("shrink_factor must lie in (0, 1)");
    if (!(abs_tol > 0.0))
        throw DomainError("abs_tol must be positive");
    if (max_evaluations < 1)
        throw DomainError("max_evaluations must be positive");
}

SearchResult optimize_box(const Objective &objective, std::span<const Interval> box, Direction direction,
                          const SearchConfig &cfg)
{
    cfg.validate();
    const std::size_t dim = box.size();
    if (dim < 1 || dim > 3)
        throw DomainError("search box must have 1 to 3 dimensions, got " + std::to_string(dim));
    std::vector<double> lo(dim), hi(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        const Interval &iv = box[k];
        if (!(iv.lo <= iv.hi) || !std::isfinite(iv.lo) || !std::isfinite(iv.hi))
            throw DomainError("search interval " + std::to_string(k) + " is empty or unbounded");
        if (iv.scale == Scale::Log && !(iv.lo > 0.0))
            throw DomainError("log-scaled search interval " + std::to_string(k) + " must be positive");
        lo[k] = to_internal(iv.lo, iv.scale);
        hi[k] = to_internal(iv.hi, iv.scale);
    }

    const int n = cfg.coarse_points_per_dim;
    std::int64_t per_round = 1;
    for (std::size_t k = 0; k < dim; ++k)
        per_round *= n;
    if (per_round * cfg.refinement_rounds > cfg.max_evaluations)
        throw BudgetExceededError("search needs " + std::to_string(per_round * cfg.refinement_rounds) +
                                  " evaluations, budget is " + std::to_string(cfg.max_evaluations));

    SearchResult result;
    result.arg.assign(dim, 0.0);
    bool have_best = false;
    std::vector<double> best_u(dim);
    std::vector<double> clo = lo, chi = hi;
    std::vector<double> x(dim);
    std::vector<double> u(dim);
    std::vector<int> idx(dim);

    while (result.evals + per_round <= cfg.max_evaluations) {
        const double before = result.value;
        const bool had_best = have_best;
        std::fill(idx.begin(), idx.end(), 0);
        for (std::int64_t count = 0; count < per_round; ++count) {
            for (std::size_t k = 0; k < dim; ++k) {
                u[k] = clo[k] + (chi[k] - clo[k]) * idx[k] / (n - 1);
                x[k] = std::clamp(to_external(u[k], box[k].scale), box[k].lo, box[k].hi);
            }
            const double v = objective(std::span<const double>(x));
            ++result.evals;
            if (std::isfinite(v) && (!have_best || better(v, result.value, direction))) {
                have_best = true;
                result.value = v;
                result.arg = x;
                best_u = u;
            }
            // Advance the multi-index, last axis fastest.
            for (std::size_t k = dim; k-- > 0;) {
                if (++idx[k] < n)
                    break;
                idx[k] = 0;
            }
        }
        ++result.rounds;
        if (!have_best)
            throw AllNonFiniteError("objective is non-finite on the whole search grid");

        // The first round has no baseline and never counts as an improvement.
        const bool improved = had_best && std::abs(result.value - before) > cfg.abs_tol;
        if (result.rounds >= cfg.refinement_rounds && !improved)
            break;

        for (std::size_t k = 0; k < dim; ++k) {
            const double width = std::min(hi[k] - lo[k], cfg.shrink_factor * (chi[k] - clo[k]));
            double a = best_u[k] - 0.5 * width;
            double b = best_u[k] + 0.5 * width;
            if (a < lo[k]) {
                b += lo[k] - a;
                a = lo[k];
            }
            if (b > hi[k]) {
                a -= b - hi[k];
                b = hi[k];
            }
            clo[k] = std::max(a, lo[k]);
            chi[k] = b;
        }
    }
    return result;
}

} // namespace fadingrelay::search
