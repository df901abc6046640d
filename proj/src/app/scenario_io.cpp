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

#include "fadingrelay/app/scenario_io.hpp"

#include "fadingrelay/error.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace fadingrelay::app {
namespace {

namespace pt = boost::property_tree;
using spectral::ChannelScenario;
using spectral::SpectralModel;

std::string unquote(std::string v)
{
    if (v.size() >= 2 && v.front() == '"' && v.back() == '"')
        v = v.substr(1, v.size() - 2);
    return v;
}

double parse_real(const std::string &field, const std::string &raw)
{
    const std::string text = unquote(raw);
    double v = 0.0;
    const char *first = text.data();
    const char *last = first + text.size();
    if (!text.empty() && *first == '+')
        ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || text.empty())
        throw ConfigError(field, "expected a real number, got '" + text + "'");
    return v;
}

// Drops comments that follow a value on the same line.
std::string strip_inline_comments(std::istream &in)
{
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"')
                quoted = !quoted;
            if (!quoted && (line[i] == '#' || line[i] == ';')) {
                line.resize(i);
                break;
            }
        }
        out << line << '\n';
    }
    return out.str();
}

void reject_unknown(const pt::ptree &tree, const std::string &prefix, const std::set<std::string> &allowed)
{
    for (const auto &[key, child] : tree) {
        if (!child.empty())
            continue;
        if (!allowed.count(key))
            throw ConfigError(prefix + key, "unknown field");
    }
}

SpectralModel parse_link(const pt::ptree &root, const std::string &name)
{
    const auto section = root.get_child_optional(name);
    if (!section)
        throw ConfigError(name, "missing section [" + name + "]");
    const std::string p = name + ".";
    reject_unknown(*section, p, {"kind", "target_eps_sq", "upsilon", "lambda", "theta"});
    const auto kind = section->get_optional<std::string>("kind");
    if (!kind)
        throw ConfigError(p + "kind", "missing field");
    const std::string k = unquote(*kind);
    if (k == "white") {
        for (const char *f : {"target_eps_sq", "upsilon", "lambda", "theta"})
            if (section->count(f))
                throw ConfigError(p + f, "not allowed for a white link");
        return SpectralModel::white();
    }
    if (k != "piecewise")
        throw ConfigError(p + "kind", "expected \"white\" or \"piecewise\", got '" + k + "'");

    auto required = [&](const char *f) {
        const auto v = section->get_optional<std::string>(f);
        if (!v)
            throw ConfigError(p + f, "missing field");
        return parse_real(p + f, *v);
    };
    const bool has_target = section->count("target_eps_sq") > 0;
    const bool has_upsilon = section->count("upsilon") > 0;
    if (has_target == has_upsilon)
        throw ConfigError(p + "target_eps_sq", "give exactly one of target_eps_sq and upsilon");
    const double lambda = required("lambda");
    const double theta = required("theta");
    if (!(lambda > 0.0))
        throw ConfigError(p + "lambda", "must be positive");
    if (!(theta > 0.0 && theta < 0.5))
        throw ConfigError(p + "theta", "must lie in (0, 1/2)");
    try {
        if (has_target)
            return spectral::make_piecewise(required("target_eps_sq"), lambda, theta);
        return SpectralModel::piecewise(required("upsilon"), lambda, theta);
    } catch (const ConfigError &) {
        throw;
    } catch (const Error &e) {
        throw ConfigError(p + (has_target ? "target_eps_sq" : "upsilon"), e.what());
    }
}

std::string num(double v)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, ptr);
}

void write_link(std::ostream &os, const std::string &name, const SpectralModel &m)
{
    os << '[' << name << "]\n";
    if (m.is_white()) {
        os << "kind = white\n";
    } else {
        os << "kind = piecewise\n"
           << "upsilon = " << num(m.upsilon()) << '\n'
           << "lambda = " << num(m.lambda()) << '\n'
           << "theta = " << num(m.theta()) << '\n';
    }
}

} // namespace

std::vector<std::string> builtin_scenario_names()
{
    return {"fig2-top", "fig2-bottom", "white"};
}

ChannelScenario builtin_scenario(std::string_view name)
{
    ChannelScenario s;
    s.rho = 1.0;
    s.sigma_sq = 1.0;
    if (name == "white")
        return s;
    const SpectralModel moderate = spectral::make_piecewise(1e-2, 0.005, 0.04503);
    if (name == "fig2-top") {
        s.link1 = spectral::make_piecewise(1e-4, 1e-5, 0.08679);
        s.link3 = moderate;
        return s;
    }
    if (name == "fig2-bottom") {
        s.link1 = moderate;
        s.link3 = moderate;
        return s;
    }
    throw ConfigError("scenario", "unknown built-in scenario '" + std::string(name) + "'");
}

ChannelScenario parse_scenario(std::istream &in)
{
    pt::ptree root;
    std::istringstream cleaned(strip_inline_comments(in));
    try {
        pt::read_ini(cleaned, root);
    } catch (const pt::ini_parser_error &e) {
        throw ConfigError("line " + std::to_string(e.line()), e.message());
    }
    reject_unknown(root, "", {"rho", "sigma_sq", "miso_qpsk_links"});
    for (const auto &[key, child] : root)
        if (!child.empty() && key != "link1" && key != "link2" && key != "link3")
            throw ConfigError(key, "unknown section");

    ChannelScenario s;
    for (const char *f : {"rho", "sigma_sq"}) {
        const auto v = root.get_optional<std::string>(f);
        if (!v || unquote(*v).empty())
            throw ConfigError(f, "missing field");
        const double x = parse_real(f, *v);
        if (!(x > 0.0) || !std::isfinite(x))
            throw ConfigError(f, "must be positive and finite");
        (std::string(f) == "rho" ? s.rho : s.sigma_sq) = x;
    }
    if (const auto links = root.get_optional<std::string>("miso_qpsk_links")) {
        const std::string v = unquote(*links);
        if (v == "13")
            s.miso_qpsk_links = spectral::MisoQpskLinks::Links13;
        else if (v == "23")
            s.miso_qpsk_links = spectral::MisoQpskLinks::Links23;
        else
            throw ConfigError("miso_qpsk_links", "expected \"13\" or \"23\", got '" + v + "'");
    }
    s.link1 = parse_link(root, "link1");
    s.link2 = parse_link(root, "link2");
    s.link3 = parse_link(root, "link3");
    return s;
}

ChannelScenario load_scenario(const std::string &name_or_path)
{
    for (const auto &n : builtin_scenario_names())
        if (n == name_or_path)
            return builtin_scenario(n);
    std::ifstream in(name_or_path);
    if (!in)
        throw ConfigError("scenario", "no built-in scenario or readable file named '" + name_or_path + "'");
    return parse_scenario(in);
}

std::string format_scenario(const ChannelScenario &s)
{
    std::ostringstream os;
    os << "rho = " << num(s.rho) << '\n'
       << "sigma_sq = " << num(s.sigma_sq) << '\n'
       << "miso_qpsk_links = " << (s.miso_qpsk_links == spectral::MisoQpskLinks::Links13 ? "13" : "23") << "\n\n";
    write_link(os, "link1", s.link1);
    os << '\n';
    write_link(os, "link2", s.link2);
    os << '\n';
    write_link(os, "link3", s.link3);
    return os.str();
}

} // namespace fadingrelay::app
