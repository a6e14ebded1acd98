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

#ifndef SPARSEFOCUS_CLI_RUN_CONFIG_HPP
#define SPARSEFOCUS_CLI_RUN_CONFIG_HPP

#include "sparsefocus/array_geometry.hpp"
#include "sparsefocus/field_engine.hpp"
#include "sparsefocus/pathloss.hpp"
#include "sparsefocus/presets.hpp"
#include "sparsefocus/sweeps.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sparsefocus::cli
{
    enum class Command
    {
        zsweep,
        noise,
        deviation,
        sensitivity,
        lobes,
        emulate,
        compare
    };

    enum class OutputFormat
    {
        csv,
        json
    };

    std::string_view to_string(Command c);
    std::string_view to_string(OutputFormat f);

    // Invalid or incomplete configuration; the message names the key and its origin
    class ConfigError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Raw "key = value" entry. line is 0 for command-line flags.
    struct Setting
    {
        std::string value;
        std::size_t line = 0;
    };

    using Settings = std::map<std::string, Setting>;

    // Every accepted key, in documentation order
    const std::vector<std::string> &known_keys();

    // Parses "key = value" lines; '#' starts a comment. Throws ConfigError on
    // malformed lines, unknown keys and duplicates.
    Settings parse_settings(std::string_view text);

    // Entries of overrides replace those of base
    Settings merge_settings(Settings base, const Settings &overrides);

    // Fully resolved run. Lengths are meters.
    struct RunConfig
    {
        Command command = Command::zsweep;
        std::string preset;

        double frequency_hz = 0.0;
        double wavelength = 0.0;
        double transmit_power = 1.0;
        std::size_t side_count = 1;
        double spacing = 0.0;
        double focal_distance = 0.0;
        std::vector<std::size_t> side_count_variants;

        double grid_min = 0.0;
        double grid_max = 0.0;
        std::size_t grid_points = 400;
        bool grid_log = true;

        std::string model = "exact";
        double sigma_phi = 0.0;
        std::vector<double> sigmas;
        double delta_x = 0.0;
        double delta_y = 0.0;
        std::vector<double> deviations;
        CIPathLossParams pathloss{2.0, 1.0, 0.0};
        std::size_t trials = 0;
        std::optional<std::uint64_t> seed;

        std::vector<SensitivityConfig> sensitivity;
        double delta_max = 0.0;
        std::size_t delta_points = 21;

        std::vector<std::string> inputs;
        std::string compare_window = "lobe";

        std::string out_dir = ".";
        OutputFormat format = OutputFormat::csv;
        bool normalize = false;

        ArrayConfig array() const { return ArrayConfig(side_count, spacing, wavelength); }
        FocusScenario scenario() const { return {focal_distance, transmit_power}; }
        std::vector<double> grid() const;
    };

    // Validates settings and fills defaults, from a preset when one is named.
    // Lengths accept a "lam" suffix ("700lam") and are converted with the resolved
    // wavelength; frequency gives wavelength = c / f with c = 2.998e8 m/s.
    RunConfig resolve(const Settings &settings);

    RunConfig parse_config(std::string_view text);
}

#endif
