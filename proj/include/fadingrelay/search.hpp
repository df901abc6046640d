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

#ifndef FADINGRELAY_SEARCH_HPP
#define FADINGRELAY_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace fadingrelay::search {

enum class Scale { Linear, Log };
enum class Direction { Max, Min };

// Closed search interval. Log-scaled intervals need lo > 0.
struct Interval {
    double lo = 0.0;
    double hi = 1.0;
    Scale scale = Scale::Linear;
};

struct SearchConfig {
    int coarse_points_per_dim = 24;
    // Minimum number of grid rounds. Refinement continues past this count
    // while a round still improves the best value by more than abs_tol.
    int refinement_rounds = 4;
    double shrink_factor = 0.25;
    double abs_tol = 1e-6;
    std::int64_t max_evaluations = 1'000'000;

    // Throws DomainError on out-of-range fields.
    void validate() const;
};

struct SearchResult {
    std::vector<double> arg;
    double value = 0.0;
    std::int64_t evals = 0;
    int rounds = 0;
};

using Objective = std::function<double(std::span<const double>)>;

/// Nested grid refinement over a box of dimension 1 to 3. Each round
/// evaluates a full tensor grid, then recentres a box shrunk by
/// shrink_factor on the incumbent, shifted to stay inside the original box.
/// Non-finite objective values rank as worst. Ties keep the lowest
/// multi-index, so results are bit-reproducible.
///
/// Throws BudgetExceededError if points^dim · refinement_rounds exceeds
/// max_evaluations, and AllNonFiniteError if the first grid has no finite
/// value.
SearchResult optimize_box(const Objective &objective, std::span<const Interval> box, Direction direction,
                          const SearchConfig &cfg);

} // namespace fadingrelay::search

#endif
