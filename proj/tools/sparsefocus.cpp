// SPDX-License-Identifier: Apache-2.0
//
// sparsefocus: near-field power focusing of sparse planar arrays
// Copyright (C) 2026 The sparsefocus authors
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

// Command-line front end: sparsefocus <command> [--preset NAME | --config FILE] [options]

#include "sparsefocus/cli/run_config.hpp"
#include "sparsefocus/cli/runner.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace sparsefocus::cli;

namespace
{
    std::string read_file(const std::string &path)
    {
        std::ifstream f(path, std::ios::binary);
        if (!f)
            throw ConfigError("cannot open config file '" + path + "'");
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }

    std::string dashed(std::string key)
    {
        std::replace(key.begin(), key.end(), '_', '-');
        return key;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Near-field power focusing of sparse planar arrays"};
    app.set_version_flag("--version", "sparsefocus 1.0.0");

    std::string command;
    app.add_option("command", command, "zsweep | noise | deviation | sensitivity | lobes | emulate | compare");

    std::string config_path;
    app.add_option("--config", config_path, "key = value config file; flags override its entries");

    bool list_presets = false;
    app.add_flag("--list-presets", list_presets, "print the preset names and exit");

    std::map<std::string, std::string> flag_values;
    for (const auto &key : known_keys())
    {
        if (key == "command")
            continue;
        std::string names = "--" + dashed(key);
        if (dashed(key) != key)
            names += ",--" + key;
        app.add_option(names, flag_values[key], "config key '" + key + "'");
    }

    CLI11_PARSE(app, argc, argv);

    if (list_presets)
    {
        for (const auto &p : sparsefocus::presets())
            std::cout << p.name << "  " << p.description << "\n";
        return 0;
    }

    try
    {
        Settings settings;
        if (!config_path.empty())
            settings = parse_settings(read_file(config_path));

        Settings flags;
        for (const auto &key : known_keys())
        {
            if (key == "command")
                continue;
            if (app.get_option("--" + dashed(key))->count() > 0)
                flags[key] = {flag_values[key], 0};
        }
        if (!command.empty())
            flags["command"] = {command, 0};

        const RunConfig rc = resolve(merge_settings(std::move(settings), flags));
        const RunResult result = run(rc);
        for (const auto &w : result.warnings)
            std::cerr << "warning: " << w << "\n";
        for (const auto &f : result.files)
            std::cout << f.string() << "\n";
        return 0;
    }
    catch (const ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
