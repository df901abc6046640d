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

#ifndef FADINGRELAY_APP_VALIDATE_HPP
#define FADINGRELAY_APP_VALIDATE_HPP

#include "fadingrelay/spectral.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fadingrelay::app {

enum class ValidationLevel { Quick, Full };

struct ValidationCheck {
    std::string name;
    double analytic = 0.0;
    double empirical = 0.0;
    // Absolute tolerance on |analytic - empirical|.
    double tolerance = 0.0;
    bool passed = false;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_passed() const;
};

/// Cross-checks the analytic prediction errors of every link against
/// simulated paths, and the QPSK Monte Carlo kernel against quadrature.
/// Quick uses 2^16-sample paths and 1e5 Monte Carlo samples; Full uses
/// 2^18 and 1e6.
ValidationReport run_validation(const spectral::ChannelScenario &s, std::uint64_t seed, ValidationLevel level);

std::string render_validation(const ValidationReport &report);

} // namespace fadingrelay::app

#endif
