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

#ifndef FADINGRELAY_APP_SCENARIO_IO_HPP
#define FADINGRELAY_APP_SCENARIO_IO_HPP

#include "fadingrelay/spectral.hpp"

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace fadingrelay::app {

/// Built-in scenarios: "fig2-top", "fig2-bottom" and "white".
std::vector<std::string> builtin_scenario_names();

/// Throws ConfigError (field "scenario") for unknown names.
spectral::ChannelScenario builtin_scenario(std::string_view name);

/// INI scenario format. Top-level keys:
///   rho, sigma_sq          positive reals (both required)
///   miso_qpsk_links        "13" (default) or "23"
/// Sections [link1], [link2], [link3], each with
///   kind = white | piecewise
/// and for piecewise links either
///   target_eps_sq, lambda, theta   (Υ and Θ solved from unit variance)
/// or
///   upsilon, lambda, theta         (taken as given, must have unit variance)
/// Values may be double-quoted. Comments start with '#' or ';'.
/// Errors throw ConfigError naming the offending field, e.g. "link3.lambda".
spectral::ChannelScenario parse_scenario(std::istream &in);

/// A built-in name, or else a path to a scenario file.
spectral::ChannelScenario load_scenario(const std::string &name_or_path);

/// INI text that parse_scenario reads back to an equivalent scenario.
std::string format_scenario(const spectral::ChannelScenario &s);

} // namespace fadingrelay::app

#endif
