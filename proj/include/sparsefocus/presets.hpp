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

#ifndef SPARSEFOCUS_PRESETS_HPP
#define SPARSEFOCUS_PRESETS_HPP

#include "sparsefocus/array_geometry.hpp"
#include "sparsefocus/field_engine.hpp"
#include "sparsefocus/pathloss.hpp"
#include "sparsefocus/sweeps.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sparsefocus
{
    inline constexpr double speed_of_light = 2.998e8; // m/s

    double wavelength_from_frequency(double frequency_hz);

    // z-grid relative to the focal distance: [lo_factor L, hi_factor L]
    struct GridSpec
    {
        double lo_factor = 0.2;
        double hi_factor = 4.0;
        std::size_t points = 400;
        bool logarithmic = true;

        std::vector<double> build(double focal_distance) const;
    };

    // Geometry and sweep parameters of one figure configuration. All lengths are
    // in wavelengths; Preset::array() and Preset::scenario() convert to meters.
    struct Preset
    {
        std::string name;
        std::string description;
        double frequency_hz = 300e9;
        double transmit_power = 1.0;
        std::size_t side_count = 1;
        double spacing_lambda = 0.5;
        double focal_lambda = 1.0;
        GridSpec grid;
        std::vector<std::size_t> side_count_variants;       // fig2c
        std::vector<double> sigmas;                          // noise sweep, radians
        std::vector<double> deviations_lambda;               // dx = dy values
        std::vector<SensitivityConfig> sensitivity_lambda;   // spacing in wavelengths
        double delta_max_lambda = 1.0;
        std::size_t delta_points = 21;
        CIPathLossParams pathloss;

        double wavelength() const { return wavelength_from_frequency(frequency_hz); }
        ArrayConfig array() const;
        FocusScenario scenario() const;
    };

    const std::vector<Preset> &presets();

    // Throws std::invalid_argument listing the known names
    const Preset &find_preset(std::string_view name);
}

#endif
