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

#include "fadingrelay/app/report.hpp"

#include "fadingrelay/fading_number.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace fadingrelay::app {
namespace {

std::string fmt(const char *format, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

} // namespace

std::string render_report(const spectral::ChannelScenario &s, const std::string &name, bool show_bits)
{
    const auto r = fading::classify_regime(s);
    const double ln2 = std::log(2.0);
    std::ostringstream os;
    auto line = [&](const std::string &label, double nats) {
        os << "  " << label << fmt("%12.4f nats", nats);
        if (show_bits)
            os << fmt("%12.4f bits", nats / ln2);
        os << '\n';
    };
    os << "scenario " << name << "  (rho = " << fmt("%g", s.rho) << ", sigma^2 = " << fmt("%g", s.sigma_sq) << ")\n";
    const double eps[3] = {r.eps1_sq, r.eps2_sq, r.eps3_sq};
    const double chi[3] = {r.chi1, r.chi2, r.chi3};
    const char *links[3] = {"link1 tx->relay", "link2 tx->rx   ", "link3 relay->rx"};
    for (int i = 0; i < 3; ++i) {
        os << "  " << links[i] << "  eps^2 = " << fmt("%-12.6g", eps[i]) << " chi =" << fmt("%10.4f nats", chi[i]);
        if (show_bits)
            os << fmt("%10.4f bits", chi[i] / ln2);
        os << '\n';
    }
    line("relay upper bound   ", r.upper);
    line("relay lower bound   ", r.lower);
    line("gap to MISO         ", r.gap_to_miso);
    os << "  regime  " << fading::to_string(r.regime) << '\n';
    os << "  flags  ";
    bool any = false;
    if (r.direct_optimal) {
        os << " DirectOptimal";
        any = true;
    }
    if (r.cooperation_strictly_better) {
        os << " CooperationStrictlyBetter";
        any = true;
    }
    if (r.one_bit_gap) {
        os << " OneBitGap";
        any = true;
    }
    if (!any)
        os << " none";
    os << '\n';
    return os.str();
}

} // namespace fadingrelay::app
