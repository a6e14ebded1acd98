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

#include "sparsefocus/power_trace.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sparsefocus
{
    namespace
    {
        constexpr std::array<std::pair<ModelTag, std::string_view>, 7> tag_names{{
            {ModelTag::exact, "exact"},
            {ModelTag::closed_form, "closed_form"},
            {ModelTag::noisy_expectation, "noisy_expectation"},
            {ModelTag::noisy_mc, "noisy_mc"},
            {ModelTag::deviated, "deviated"},
            {ModelTag::deviated_taylor, "deviated_taylor"},
            {ModelTag::emulated, "emulated"},
        }};
    }

    std::string_view to_string(ModelTag tag)
    {
        for (const auto &[t, name] : tag_names)
            if (t == tag)
                return name;
        return "unknown";
    }

    ModelTag model_tag_from_string(std::string_view name)
    {
        for (const auto &[t, n] : tag_names)
            if (n == name)
                return t;
        throw std::invalid_argument("unknown model tag '" + std::string(name) + "'");
    }

    ConfigSnapshot ConfigSnapshot::from(const ArrayConfig &cfg, const FocusScenario &sc)
    {
        ConfigSnapshot s;
        s.side_count = cfg.side_count();
        s.spacing = cfg.spacing();
        s.wavelength = cfg.wavelength();
        s.focal_distance = sc.focal_distance;
        s.transmit_power = sc.transmit_power;
        return s;
    }

    bool ConfigSnapshot::same_geometry(const ConfigSnapshot &o) const
    {
        return side_count == o.side_count && spacing == o.spacing && wavelength == o.wavelength &&
               focal_distance == o.focal_distance && transmit_power == o.transmit_power;
    }

    void check_grid(const std::vector<double> &grid)
    {
        if (grid.empty())
            throw std::invalid_argument("grid must not be empty");
        for (std::size_t i = 0; i < grid.size(); ++i)
        {
            if (!std::isfinite(grid[i]) || grid[i] <= 0.0)
                throw std::invalid_argument("grid point " + std::to_string(i) + " must be finite and > 0");
            if (i > 0 && !(grid[i] > grid[i - 1]))
                throw std::invalid_argument("grid must be strictly increasing (index " + std::to_string(i) + ")");
        }
    }

    void PowerTrace::validate() const
    {
        check_grid(grid);
        if (values.size() != grid.size())
            throw std::invalid_argument("trace values and grid differ in length");
        for (double v : values)
            if (!std::isfinite(v) || v < 0.0)
                throw std::invalid_argument("trace values must be finite and >= 0");
    }

    PowerTrace peak_normalized(const PowerTrace &trace)
    {
        trace.validate();
        const double peak = *std::max_element(trace.values.begin(), trace.values.end());
        if (peak <= 0.0)
            throw std::domain_error("cannot normalize a trace whose peak is 0");
        PowerTrace out = trace;
        for (double &v : out.values)
            v /= peak;
        // x / x is exactly 1 in IEEE arithmetic, so the maximum is exactly 1
        out.normalized = true;
        return out;
    }

    std::vector<double> linear_grid(double lo, double hi, std::size_t count)
    {
        if (count < 2 || !(hi > lo))
            throw std::invalid_argument("linear_grid: need count >= 2 and hi > lo");
        std::vector<double> g(count);
        const double step = (hi - lo) / double(count - 1);
        for (std::size_t i = 0; i < count; ++i)
            g[i] = lo + step * double(i);
        g.back() = hi;
        return g;
    }

    std::vector<double> log_grid(double lo, double hi, std::size_t count)
    {
        if (count < 2 || !(hi > lo) || !(lo > 0.0))
            throw std::invalid_argument("log_grid: need count >= 2 and 0 < lo < hi");
        std::vector<double> g(count);
        const double a = std::log(lo), b = std::log(hi);
        for (std::size_t i = 0; i < count; ++i)
            g[i] = std::exp(a + (b - a) * double(i) / double(count - 1));
        g.front() = lo;
        g.back() = hi;
        return g;
    }
}
