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

#include "fadingrelay/app/sweep.hpp"

#include "fadingrelay/error.hpp"
#include "fadingrelay/fading_number.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace fadingrelay::app {
namespace {

using bounds::BoundId;

std::string fixed(double v, int digits = 9)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, digits);
    return std::string(buf, ptr);
}

std::string coord(double v)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
    return std::string(buf, ptr);
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            return parts;
        start = pos + 1;
    }
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

template <typename T>
bool parse_number(std::string_view s, T &out)
{
    s = trim(s);
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return !s.empty() && ec == std::errc() && ptr == s.data() + s.size();
}

Column column_of(BoundId id)
{
    switch (id) {
    case BoundId::DirectUpper:
        return kDirectUpper;
    case BoundId::RelayMisoUpper:
        return kRelayMisoUpper;
    case BoundId::DfLower:
        return kDfLower;
    case BoundId::DfQpskLower:
        return kDfQpskLower;
    case BoundId::MisoBeamSelectLower:
        return kMisoBeamSelectLower;
    case BoundId::MisoQpskLower:
        break;
    }
    return kMisoQpskLower;
}

double evaluate(BoundId id, const SweepRequest &req, double snr)
{
    const auto &s = req.scenario;
    switch (id) {
    case BoundId::DirectUpper:
        return bounds::c_iid_upper(snr, req.search).value_nats;
    case BoundId::RelayMisoUpper:
        return bounds::relay_miso_upper(s, snr, req.search).value_nats;
    case BoundId::DfLower:
        return bounds::df_lower(s, snr, req.search).value_nats;
    case BoundId::MisoBeamSelectLower:
        return bounds::miso_beam_select_lower(s, snr, req.search).value_nats;
    case BoundId::MisoQpskLower:
        return qpsk::miso_qpsk_lower(s, snr, req.mc).value;
    case BoundId::DfQpskLower:
        break;
    }
    return qpsk::df_qpsk_lower(s, snr, req.mc).estimate.value;
}

std::optional<double> combine(const std::optional<double> &a, const std::optional<double> &b)
{
    if (a && b)
        return std::max(*a, *b);
    return a ? a : b;
}

} // namespace

double db_to_linear(double db)
{
    return std::pow(10.0, db / 10.0);
}

double linear_to_db(double snr)
{
    return 10.0 * std::log10(snr);
}

SnrRange parse_snr_range(std::string_view text)
{
    const auto parts = split(text, ':');
    SnrRange r;
    if (parts.size() != 3 || !parse_number(parts[0], r.min_db) || !parse_number(parts[1], r.max_db) ||
        !parse_number(parts[2], r.points))
        throw ConfigError("snr-db", "expected min:max:points, got '" + std::string(text) + "'");
    if (!std::isfinite(r.min_db) || !std::isfinite(r.max_db))
        throw ConfigError("snr-db", "range limits must be finite");
    const bool single = r.points == 1 && r.min_db == r.max_db;
    if (!single && !(r.min_db < r.max_db && r.points >= 2))
        throw ConfigError("snr-db", "need min < max and at least 2 points, or min == max with 1 point");
    return r;
}

std::vector<double> snr_grid_db(const SnrRange &range)
{
    if (range.points == 1)
        return {range.min_db};
    std::vector<double> grid(range.points);
    for (int i = 0; i < range.points; ++i)
        grid[i] = range.min_db + (range.max_db - range.min_db) * i / (range.points - 1);
    grid.back() = range.max_db;
    return grid;
}

std::vector<BoundId> all_bounds()
{
    return {BoundId::DirectUpper,         BoundId::RelayMisoUpper, BoundId::DfLower, BoundId::DfQpskLower,
            BoundId::MisoBeamSelectLower, BoundId::MisoQpskLower};
}

std::vector<BoundId> parse_bound_list(std::string_view text)
{
    std::vector<BoundId> out;
    for (auto part : split(text, ',')) {
        part = trim(part);
        if (part.empty())
            continue;
        bool found = false;
        for (const BoundId id : all_bounds()) {
            if (bounds::to_string(id) == part) {
                if (std::find(out.begin(), out.end(), id) == out.end())
                    out.push_back(id);
                found = true;
            }
        }
        if (!found)
            throw ConfigError("bounds", "unknown bound '" + std::string(part) + "'");
    }
    if (out.empty())
        throw ConfigError("bounds", "select at least one bound");
    return out;
}

SweepResult run_sweep(const SweepRequest &req)
{
    req.scenario.validate();
    req.search.validate();
    req.mc.validate();
    if (req.bounds.empty())
        throw ConfigError("bounds", "select at least one bound");

    SweepResult out;
    out.scenario_name = req.scenario_name;
    out.snr_db = snr_grid_db(req.range);
    const std::size_t n = out.snr_db.size();
    for (auto &col : out.values)
        col.assign(n, std::nullopt);

    const auto report = fading::classify_regime(req.scenario);
    out.miso_fading_number = std::max(report.chi2, report.chi3);
    out.relay_fading_lower = report.lower;

    for (const BoundId id : req.bounds) {
        const Column c = column_of(id);
        bool any = false;
        for (std::size_t i = 0; i < n; ++i) {
            try {
                out.values[c][i] = evaluate(id, req, db_to_linear(out.snr_db[i]));
                any = true;
            } catch (const Error &e) {
                out.warnings.push_back(std::string(bounds::to_string(id)) + " at " + fixed(out.snr_db[i]) +
                                       " dB: " + e.what());
            }
        }
        if (!any)
            out.failed_everywhere.push_back(id);
    }
    for (std::size_t i = 0; i < n; ++i) {
        out.values[kDfLowerCombined][i] = combine(out.values[kDfLower][i], out.values[kDfQpskLower][i]);
        out.values[kMisoLowerCombined][i] =
            combine(out.values[kMisoBeamSelectLower][i], out.values[kMisoQpskLower][i]);
    }
    return out;
}

std::string format_csv(const SweepResult &result)
{
    std::string out = "snr_db";
    for (const auto name : kColumnNames) {
        out += ',';
        out += name;
    }
    out += '\n';
    for (std::size_t i = 0; i < result.snr_db.size(); ++i) {
        out += fixed(result.snr_db[i]);
        for (const auto &col : result.values) {
            out += ',';
            if (col[i])
                out += fixed(*col[i]);
        }
        out += '\n';
    }
    return out;
}

std::string render_svg(const SweepResult &result)
{
    constexpr double kWidth = 800.0;
    constexpr double kHeight = 480.0;
    constexpr double kLeft = 70.0;
    constexpr double kRight = 250.0;
    constexpr double kTop = 30.0;
    constexpr double kBottom = 60.0;
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;

    double x_lo = result.snr_db.empty() ? -10.0 : result.snr_db.front();
    double x_hi = result.snr_db.empty() ? 90.0 : result.snr_db.back();
    if (x_hi <= x_lo) {
        x_lo -= 1.0;
        x_hi += 1.0;
    }
    double y_hi = std::max({1.0, result.miso_fading_number, result.relay_fading_lower});
    for (const auto &col : result.values)
        for (const auto &v : col)
            if (v && std::isfinite(*v))
                y_hi = std::max(y_hi, *v);
    y_hi = std::ceil(y_hi * 1.05);
    double y_lo = std::min(0.0, std::floor(std::min(result.miso_fading_number, result.relay_fading_lower)));

    auto px = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
    auto py = [&](double y) { return kTop + (y_hi - y) / (y_hi - y_lo) * plot_h; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
       << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << coord(kLeft + plot_w / 2) << "\" y=\"18\" text-anchor=\"middle\">"
       << result.scenario_name << "</text>\n";
    os << "<rect x=\"" << coord(kLeft) << "\" y=\"" << coord(kTop) << "\" width=\"" << coord(plot_w)
       << "\" height=\"" << coord(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";

    const double x_step = (x_hi - x_lo) > 40.0 ? 10.0 : ((x_hi - x_lo) > 8.0 ? 2.0 : 0.5);
    for (double x = std::ceil(x_lo / x_step) * x_step; x <= x_hi + 1e-9; x += x_step) {
        os << "<line x1=\"" << coord(px(x)) << "\" y1=\"" << coord(kTop + plot_h) << "\" x2=\"" << coord(px(x))
           << "\" y2=\"" << coord(kTop) << "\" stroke=\"#dddddd\"/>\n";
        os << "<text x=\"" << coord(px(x)) << "\" y=\"" << coord(kTop + plot_h + 16)
           << "\" text-anchor=\"middle\">" << fixed(x, 6) << "</text>\n";
    }
    const double y_step = (y_hi - y_lo) > 10.0 ? 2.0 : 1.0;
    for (double y = std::ceil(y_lo / y_step) * y_step; y <= y_hi + 1e-9; y += y_step) {
        os << "<line x1=\"" << coord(kLeft) << "\" y1=\"" << coord(py(y)) << "\" x2=\"" << coord(kLeft + plot_w)
           << "\" y2=\"" << coord(py(y)) << "\" stroke=\"#dddddd\"/>\n";
        os << "<text x=\"" << coord(kLeft - 6) << "\" y=\"" << coord(py(y) + 4) << "\" text-anchor=\"end\">"
           << fixed(y, 6) << "</text>\n";
    }
    os << "<text x=\"" << coord(kLeft + plot_w / 2) << "\" y=\"" << coord(kHeight - 20)
       << "\" text-anchor=\"middle\">SNR [dB]</text>\n";
    os << "<text transform=\"translate(20," << coord(kTop + plot_h / 2)
       << ") rotate(-90)\" text-anchor=\"middle\">Capacity [nats/channel use]</text>\n";

    struct Series {
        Column column;
        const char *label;
        const char *color;
        const char *dash;
    };
    const Series series[] = {
        {kRelayMisoUpper, "upper bound (relay and MISO)", "#d62728", ""},
        {kMisoLowerCombined, "MISO lower bound", "#1f77b4", ""},
        {kDfLowerCombined, "relay lower bound", "#2ca02c", ""},
        {kDirectUpper, "direct upper bound", "#7f7f7f", "6,3"},
    };
    double legend_y = kTop + 10.0;
    auto legend = [&](const char *label, const char *color, const char *dash) {
        const double lx = kLeft + plot_w + 15.0;
        os << "<line x1=\"" << coord(lx) << "\" y1=\"" << coord(legend_y) << "\" x2=\"" << coord(lx + 25)
           << "\" y2=\"" << coord(legend_y) << "\" stroke=\"" << color << "\" stroke-width=\"2\"";
        if (*dash)
            os << " stroke-dasharray=\"" << dash << '"';
        os << "/>\n<text x=\"" << coord(lx + 32) << "\" y=\"" << coord(legend_y + 4) << "\">" << label
           << "</text>\n";
        legend_y += 20.0;
    };
    for (const auto &s : series) {
        const auto &col = result.values[s.column];
        if (std::none_of(col.begin(), col.end(), [](const auto &v) { return v.has_value(); }))
            continue;
        std::string points;
        auto flush = [&]() {
            if (points.empty())
                return;
            os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"2\"";
            if (*s.dash)
                os << " stroke-dasharray=\"" << s.dash << '"';
            os << " points=\"" << points << "\"/>\n";
            points.clear();
        };
        for (std::size_t i = 0; i < col.size(); ++i) {
            if (!col[i] || !std::isfinite(*col[i])) {
                flush();
                continue;
            }
            if (!points.empty())
                points += ' ';
            points += coord(px(result.snr_db[i])) + ',' + coord(py(*col[i]));
        }
        flush();
        legend(s.label, s.color, s.dash);
    }
    auto hline = [&](double y, const char *label, const char *color) {
        os << "<line x1=\"" << coord(kLeft) << "\" y1=\"" << coord(py(y)) << "\" x2=\"" << coord(kLeft + plot_w)
           << "\" y2=\"" << coord(py(y)) << "\" stroke=\"" << color << "\" stroke-dasharray=\"2,3\"/>\n";
        legend(label, color, "2,3");
    };
    hline(result.miso_fading_number, "fading number, MISO", "#9467bd");
    hline(result.relay_fading_lower, "fading number, relay (lower)", "#8c564b");
    os << "</svg>\n";
    return os.str();
}

} // namespace fadingrelay::app
