// SPDX-License-Identifier: Apache-2.0
//
// wipt-sim: Monte Carlo simulator for multi-antenna wireless information and power transfer
// Copyright (C) 2026 The wipt-sim Authors
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
#include "wipt/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char **argv)
{
    CLI::App app{"Monte Carlo simulator for multi-antenna wireless information and power transfer"};
    app.require_subcommand(1);

    wipt::cli::CommonFlags flags;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    auto *seed_opt = app.add_option("--seed", seed, "Master seed (overrides the configuration)");
    auto *trials_opt = app.add_option("--trials", trials, "Monte Carlo trials (overrides the configuration)")
                           ->check(CLI::PositiveNumber);
    app.add_option("--threads", flags.threads, "Worker threads, 0 = all cores");
    seed_opt->configurable(false);
    trials_opt->configurable(false);

    std::string preset_name;
    std::vector<std::string> overrides;
    std::string out_path;
    auto *preset = app.add_subcommand("preset", "Run a built-in preset configuration (fig5 or fig6)");
    preset->add_option("name", preset_name, "Preset name")->required();
    preset->add_option("--set", overrides, "Override a configuration key (key=value)");
    preset->add_option("--out", out_path, "Output CSV path")->required();

    std::string config_path;
    auto *run = app.add_subcommand("run", "Run an experiment described by a key=value configuration file");
    run->add_option("--config", config_path, "Configuration file")->required();
    run->add_option("--out", out_path, "Output CSV path")->required();

    // The common flags are accepted after the subcommand as well.
    for (auto *sub : {preset, run})
    {
        sub->add_option("--seed", seed, "Master seed");
        sub->add_option("--trials", trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
        sub->add_option("--threads", flags.threads, "Worker threads, 0 = all cores");
    }

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : wipt::cli::config_failure;
    }

    auto given = [](CLI::App *a, const char *name) { return a->count(name) > 0; };
    if (given(&app, "--seed") || given(preset, "--seed") || given(run, "--seed"))
        flags.seed = seed;
    if (given(&app, "--trials") || given(preset, "--trials") || given(run, "--trials"))
        flags.trials = trials;

    if (preset->parsed())
        return wipt::cli::cmd_preset(preset_name, overrides, out_path, flags, std::cerr);
    return wipt::cli::cmd_run(config_path, out_path, flags, std::cerr);
}
