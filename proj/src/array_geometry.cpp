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

#include "sparsefocus/array_geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sparsefocus
{
    ArrayConfig::ArrayConfig(std::size_t side_count, double spacing, double wavelength)
        : side_count_(side_count), spacing_(spacing), wavelength_(wavelength)
    {
        if (side_count == 0)
            throw std::invalid_argument("ArrayConfig: side_count must be >= 1");
        if (!std::isfinite(spacing) || spacing <= 0.0)
            throw std::invalid_argument("ArrayConfig: spacing must be finite and > 0");
        if (!std::isfinite(wavelength) || wavelength <= 0.0)
            throw std::invalid_argument("ArrayConfig: wavelength must be finite and > 0");
    }

    double ArrayConfig::coordinate(std::size_t i) const
    {
        return (double(i) - 0.5 * (double(side_count_) + 1.0)) * spacing_;
    }

    void check_index(const ArrayConfig &cfg, ElementIndex idx)
    {
        const auto s = cfg.side_count();
        if (idx.n < 1 || idx.n > s || idx.m < 1 || idx.m > s)
            throw std::out_of_range("element index (" + std::to_string(idx.n) + ", " + std::to_string(idx.m) +
                                    ") outside [1, " + std::to_string(s) + "]");
    }

    void check_deviation(const DeviationModel &dev)
    {
        if (!std::isfinite(dev.delta_x) || !std::isfinite(dev.delta_y))
            throw std::invalid_argument("DeviationModel: deviations must be finite");
    }

    bool deviation_outside_small_regime(const ArrayConfig &cfg, const DeviationModel &dev)
    {
        const double half = 0.5 * cfg.spacing();
        return std::abs(dev.delta_x) > half || std::abs(dev.delta_y) > half;
    }

    void check_observation_distance(double l)
    {
        if (!std::isfinite(l) || l <= 0.0)
            throw std::invalid_argument("observation distance must be finite and > 0 (point in front of the array)");
    }

    std::vector<ElementPosition> element_coordinates(const ArrayConfig &cfg)
    {
        const auto s = cfg.side_count();
        std::vector<ElementPosition> out;
        out.reserve(cfg.element_count());
        for (std::size_t n = 1; n <= s; ++n)
            for (std::size_t m = 1; m <= s; ++m)
                out.push_back({cfg.coordinate(n), cfg.coordinate(m)});
        return out;
    }

    double element_distance(const ArrayConfig &cfg, ElementIndex idx, double l)
    {
        check_index(cfg, idx);
        check_observation_distance(l);
        const double x = cfg.coordinate(idx.n), y = cfg.coordinate(idx.m);
        return std::sqrt(x * x + y * y + l * l);
    }

    double perturbed_distance(const ArrayConfig &cfg, ElementIndex idx, double l, const DeviationModel &dev)
    {
        check_index(cfg, idx);
        check_observation_distance(l);
        check_deviation(dev);
        const double x = cfg.coordinate(idx.n) + dev.delta_x;
        const double y = cfg.coordinate(idx.m) + dev.delta_y;
        return std::sqrt(x * x + y * y + l * l);
    }

    double deviation_phase(const ArrayConfig &cfg, ElementIndex idx, double l, const DeviationModel &dev)
    {
        check_deviation(dev);
        const double d = element_distance(cfg, idx, l);
        const double x = cfg.coordinate(idx.n), y = cfg.coordinate(idx.m);
        return cfg.wavenumber() * (x * dev.delta_x + y * dev.delta_y) / d;
    }
}
