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

#ifndef FADINGRELAY_APP_REPORT_HPP
#define FADINGRELAY_APP_REPORT_HPP

#include "fadingrelay/spectral.hpp"

#include <string>

namespace fadingrelay::app {

/// Human-readable fading-number report: ε² and χ per link, the relay-channel
/// upper and lower bounds, regime flags and the gap to the MISO fading
/// number. Values are in nats; with show_bits a bits column is added.
std::string render_report(const spectral::ChannelScenario &s, const std::string &name, bool show_bits);

} // namespace fadingrelay::app

#endif
