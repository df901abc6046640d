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
#include "fadingrelay/app/scenario_io.hpp"
#include "fadingrelay/app/sweep.hpp"
#include "fadingrelay/app/validate.hpp"
#include "fadingrelay/error.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace fadingrelay;

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

void write_file(const std::string &path, const std::string &text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ConfigError("output", "cannot open '" + path + "' for writing");
    out << text;
    if (!out.flush())
        throw ConfigError("output", "write to '" + path + "' failed");
}

struct Options {
    std::string scenario = "fig2-top";
    std::string snr_db = "-10:90:21";
    std::string bounds;
    std::uint64_t seed = 1;
    std::int64_t samples = qpsk::McConfig{}.samples;
    std::string csv;
    std::string svg;
    bool bits = false;
    std::string level = "quick";
};

int cmd_report(const Options &opt)
{
    const auto s = app::load_scenario(opt.scenario);
    std::cout << app::render_report(s, opt.scenario, opt.bits);
    return 0;
}

int cmd_sweep(const Options &opt)
{
    app::SweepRequest req;
    req.scenario = app::load_scenario(opt.scenario);
    req.scenario_name = opt.scenario;
    req.range = app::parse_snr_range(opt.snr_db);
    if (!opt.bounds.empty())
        req.bounds = app::parse_bound_list(opt.bounds);
    req.mc.seed = opt.seed;
    req.mc.samples = opt.samples;
    try {
        req.mc.validate();
    } catch (const DomainError &e) {
        throw ConfigError("samples", e.what());
    }

    const auto result = app::run_sweep(req);
    for (const auto &w : result.warnings)
        std::cerr << "warning: " << w << '\n';

    const auto csv = app::format_csv(result);
    if (opt.csv.empty())
        std::cout << csv;
    else
        write_file(opt.csv, csv);
    if (!opt.svg.empty())
        write_file(opt.svg, app::render_svg(result));

    for (const auto id : result.failed_everywhere)
        std::cerr << "error: bound " << bounds::to_string(id) << " failed at every grid point\n";
    return result.failed_everywhere.empty() ? 0 : kExitFailure;
}

int cmd_validate(const Options &opt)
{
    app::ValidationLevel level;
    if (opt.level == "quick")
        level = app::ValidationLevel::Quick;
    else if (opt.level == "full")
        level = app::ValidationLevel::Full;
    else
        throw ConfigError("level", "expected quick or full, got '" + opt.level + "'");
    const auto s = app::load_scenario(opt.scenario);
    const auto report = app::run_validation(s, opt.seed, level);
    std::cout << app::render_validation(report);
    return report.all_passed() ? 0 : kExitFailure;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App cli{"Fading numbers and capacity bounds for noncoherent fading relay channels"};
    cli.require_subcommand(1);
    Options opt;

    auto add_scenario = [&](CLI::App *sub) {
        sub->add_option("--scenario", opt.scenario, "Scenario file or built-in name (fig2-top, fig2-bottom, white)")
            ->capture_default_str();
    };

    auto *report = cli.add_subcommand("report", "Print fading numbers and the regime of a scenario");
    add_scenario(report);
    report->add_flag("--bits", opt.bits, "Also show values in bits");

    auto *sweep = cli.add_subcommand("sweep", "Evaluate capacity bounds over an SNR grid");
    add_scenario(sweep);
    sweep->add_option("--snr-db", opt.snr_db, "SNR grid as min:max:points in dB")->capture_default_str();
    sweep->add_option("--bounds", opt.bounds, "Comma-separated bound names (default: all)");
    sweep->add_option("--seed", opt.seed, "Monte Carlo seed")->capture_default_str();
    sweep->add_option("--samples", opt.samples, "Monte Carlo samples per estimate")->capture_default_str();
    sweep->add_option("--csv", opt.csv, "CSV output path (default: stdout)");
    sweep->add_option("--svg", opt.svg, "SVG plot output path");

    auto *validate = cli.add_subcommand("validate", "Check analytic formulas against simulation");
    add_scenario(validate);
    validate->add_option("--seed", opt.seed, "Simulation seed")->capture_default_str();
    validate->add_option("--level", opt.level, "quick or full")->capture_default_str();

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = cli.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    try {
        if (*report)
            return cmd_report(opt);
        if (*sweep)
            return cmd_sweep(opt);
        return cmd_validate(opt);
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}
