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

#ifndef FADINGRELAY_APP_SWEEP_HPP
#define FADINGRELAY_APP_SWEEP_HPP

#include "fadingrelay/capacity_bounds.hpp"
#include "fadingrelay/qpsk_mi.hpp"
#include "fadingrelay/search.hpp"
#include "fadingrelay/spectral.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fadingrelay::app {

double db_to_linear(double db);
double linear_to_db(double snr);

struct SnrRange {
    double min_db = -10.0;
    double max_db = 90.0;
    int points = 21;
};

/// Parses "min:max:points". A single point needs min == max and points == 1;
/// otherwise min < max and points >= 2. Throws ConfigError (field "snr-db").
SnrRange parse_snr_range(std::string_view text);

/// Evenly spaced grid in dB.
std::vector<double> snr_grid_db(const SnrRange &range);

/// Parses a comma-separated list of bound names as printed in the CSV
/// header. Throws ConfigError (field "bounds").
std::vector<bounds::BoundId> parse_bound_list(std::string_view text);

std::vector<bounds::BoundId> all_bounds();

struct SweepRequest {
    spectral::ChannelScenario scenario;
    std::string scenario_name;
    SnrRange range;
    std::vector<bounds::BoundId> bounds = all_bounds();
    search::SearchConfig search;
    qpsk::McConfig mc;
};

// CSV column order after snr_db.
enum Column {
    kDirectUpper,
    kRelayMisoUpper,
    kDfLower,
    kDfQpskLower,
    kDfLowerCombined,
    kMisoBeamSelectLower,
    kMisoQpskLower,
    kMisoLowerCombined,
    kColumnCount
};

inline constexpr std::array<std::string_view, kColumnCount> kColumnNames{
    "direct_upper",          "relay_miso_upper", "df_lower",        "df_qpsk_lower",
    "df_lower_combined",     "miso_beamselect_lower", "miso_qpsk_lower", "miso_lower_combined"};

struct SweepResult {
    std::string scenario_name;
    std::vector<double> snr_db;
    // values[column][point]; empty when not requested or when evaluation failed.
    std::array<std::vector<std::optional<double>>, kColumnCount> values;
    std::vector<std::string> warnings;
    // Requested bounds that failed at every grid point.
    std::vector<bounds::BoundId> failed_everywhere;
    double miso_fading_number = 0.0;
    double relay_fading_lower = 0.0;
};

/// Evaluates every requested bound on the grid. Per-point failures become
/// empty cells plus a warning. The combined columns are pointwise maxima of
/// whichever components are available.
SweepResult run_sweep(const SweepRequest &req);

/// Header plus one row per grid point, values with 9 significant digits.
std::string format_csv(const SweepResult &result);

/// Self-contained single-panel SVG of capacity (nats) against SNR (dB),
/// with horizontal lines at the two fading-number values.
std::string render_svg(const SweepResult &result);

} // namespace fadingrelay::app

#endif
