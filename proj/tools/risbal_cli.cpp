// SPDX-License-Identifier: Apache-2.0
//
// risbal - RIS reflection design for multi-operator cellular downlinks
// Copyright (C) 2026 The risbal authors
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

// Command line front end: runs a transmit-power or lambda sweep and writes the CSV table.
//
//   risbal --config scenario.cfg --sweep lambda --values 0,10,20,30 --out results.csv
//
// Exit codes: 0 success, 2 usage or configuration error, 3 numerical failure.

#include "risbal/errors.hpp"
#include "risbal/scenario.hpp"
#include "risbal/sim.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace
{
    constexpr int exit_config = 2;
    constexpr int exit_numerical = 3;
}

int main(int argc, char **argv)
{
    CLI::App app{"Balanced RIS reflection design: Monte Carlo sum-rate sweeps"};

    std::string config_path;
    std::string sweep_name;
    std::vector<double> values;
    int drops = 0;
    std::uint64_t seed = 0;
    std::string out_path;
    bool crn = false;

    app.add_option("--config", config_path, "Scenario file (key = value per line); defaults are used when omitted");
    app.add_option("--sweep", sweep_name, "Swept parameter")->required()->check(CLI::IsMember({"txpower", "lambda"}));
    app.add_option("--values", values, "Comma-separated sweep values (dBm for txpower, dB for lambda)")
        ->required()
        ->delimiter(',');
    auto *drops_opt = app.add_option("--drops", drops, "Monte Carlo drops per sweep value")->check(CLI::PositiveNumber);
    auto *seed_opt = app.add_option("--seed", seed, "Master seed");
    app.add_option("--out", out_path, "Output CSV path (stdout when omitted)");
    app.add_flag("--crn", crn, "Use common random numbers across sweep values");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_config;
    }

    try
    {
        risbal::ScenarioConfig cfg = config_path.empty() ? risbal::ScenarioConfig{} : risbal::load_scenario_file(config_path);
        if (*drops_opt)
            cfg.num_drops = drops;
        if (*seed_opt)
            cfg.seed = seed;
        cfg.validate();

        risbal::SweepOptions opts;
        opts.common_random_numbers = crn;
        opts.threads = risbal::threads_from_env();

        const auto kind = *risbal::parse_sweep_kind(sweep_name);
        const auto results = risbal::run_sweep(cfg, kind, values, opts);

        std::ostringstream csv;
        risbal::write_csv(csv, kind, results);
        if (out_path.empty())
        {
            std::cout << csv.str();
        }
        else
        {
            std::ofstream file(out_path, std::ios::binary);
            if (!file || !(file << csv.str()) || !file.flush())
            {
                std::cerr << "risbal: cannot write output file '" << out_path << "'\n";
                return exit_config;
            }
        }
    }
    catch (const risbal::ConfigError &e)
    {
        std::cerr << "risbal: " << e.what() << "\n";
        return exit_config;
    }
    catch (const risbal::Error &e)
    {
        std::cerr << "risbal: numerical failure: " << e.what() << "\n";
        return exit_numerical;
    }
    return 0;
}
