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

#ifndef SPARSEFOCUS_POWER_TRACE_HPP
#define SPARSEFOCUS_POWER_TRACE_HPP

#include "sparsefocus/array_geometry.hpp"
#include "sparsefocus/field_engine.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sparsefocus
{
    enum class ModelTag
    {
        exact,
        closed_form,
        noisy_expectation,
        noisy_mc,
        deviated,
        deviated_taylor,
        emulated
    };

    std::string_view to_string(ModelTag tag);
    // Throws std::invalid_argument for unknown names
    ModelTag model_tag_from_string(std::string_view name);

    // Inputs that produced a trace. Model-specific scalars (sigma_phi, delta_x,
    // ple, ...) go into model_parameters keyed by name.
    struct ConfigSnapshot
    {
        std::size_t side_count = 1;
        double spacing = 0.0;
        double wavelength = 0.0;
        double focal_distance = 0.0;
        double transmit_power = 0.0;
        std::map<std::string, double> model_parameters;
        std::optional<std::uint64_t> seed;
        std::optional<std::size_t> trials;

        static ConfigSnapshot from(const ArrayConfig &cfg, const FocusScenario &sc);
        ArrayConfig array() const { return ArrayConfig(side_count, spacing, wavelength); }
        FocusScenario scenario() const { return {focal_distance, transmit_power}; }

        // Same array and focus; model parameters may differ
        bool same_geometry(const ConfigSnapshot &other) const;

        bool operator==(const ConfigSnapshot &) const = default;
    };

    // Power sampled along the z-axis. values are watts, or dimensionless when normalized.
    struct PowerTrace
    {
        std::vector<double> grid;
        std::vector<double> values;
        ModelTag tag = ModelTag::exact;
        ConfigSnapshot config;
        bool normalized = false;

        std::size_t size() const { return grid.size(); }

        // Throws std::invalid_argument if the grid is empty or not strictly increasing,
        // lengths differ, or any value is negative or non-finite
        void validate() const;

        bool operator==(const PowerTrace &) const = default;
    };

    // Throws std::invalid_argument unless the grid is non-empty, strictly increasing and positive
    void check_grid(const std::vector<double> &grid);

    // Copy scaled so the maximum is exactly 1. Throws std::domain_error if the peak is 0.
    PowerTrace peak_normalized(const PowerTrace &trace);

    std::vector<double> linear_grid(double lo, double hi, std::size_t count);
    std::vector<double> log_grid(double lo, double hi, std::size_t count);
}

#endif
