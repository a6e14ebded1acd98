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

#include "sparsefocus/presets.hpp"

#include <cmath>
#include <stdexcept>

namespace sparsefocus
{
    double wavelength_from_frequency(double frequency_hz)
    {
        if (!std::isfinite(frequency_hz) || frequency_hz <= 0.0)
            throw std::invalid_argument("frequency must be finite and > 0");
        return speed_of_light / frequency_hz;
    }

    std::vector<double> GridSpec::build(double focal_distance) const
    {
        const double lo = lo_factor * focal_distance, hi = hi_factor * focal_distance;
        return logarithmic ? log_grid(lo, hi, points) : linear_grid(lo, hi, points);
    }

    ArrayConfig Preset::array() const
    {
        const double lam = wavelength();
        return ArrayConfig(side_count, spacing_lambda * lam, lam);
    }

    FocusScenario Preset::scenario() const
    {
        return {focal_lambda * wavelength(), transmit_power};
    }

    namespace
    {
        // The 7x7 geometries use [0.5L, 3L]: closer than ~0.45L the array's own
        // near zone outshines the focal lobe and would dominate the trace.
        constexpr GridSpec wide_grid{0.2, 4.0, 400, true};
        constexpr GridSpec lobe_grid{0.5, 3.0, 400, true};

        std::vector<Preset> make_presets()
        {
            std::vector<Preset> p;

            Preset fig2a;
            fig2a.name = "fig2a";
            fig2a.description = "sparse 35x35, d = 10 lambda, L = 2500 lambda";
            fig2a.side_count = 35;
            fig2a.spacing_lambda = 10.0;
            fig2a.focal_lambda = 2500.0;
            fig2a.grid = wide_grid;
            p.push_back(fig2a);

            Preset fig2a_dense = fig2a;
            fig2a_dense.name = "fig2a_dense";
            fig2a_dense.description = "dense 35x35, d = 0.5 lambda, L = 2500 lambda";
            fig2a_dense.spacing_lambda = 0.5;
            fig2a_dense.grid = lobe_grid;
            p.push_back(fig2a_dense);

            Preset fig2b;
            fig2b.name = "fig2b";
            fig2b.description = "sparse 7x7, d = 15 lambda, L = 700 lambda";
            fig2b.side_count = 7;
            fig2b.spacing_lambda = 15.0;
            fig2b.focal_lambda = 700.0;
            fig2b.grid = lobe_grid;
            p.push_back(fig2b);

            Preset fig2b_dense = fig2b;
            fig2b_dense.name = "fig2b_dense";
            fig2b_dense.description = "dense 7x7, d = 0.5 lambda, L = 700 lambda";
            fig2b_dense.spacing_lambda = 0.5;
            p.push_back(fig2b_dense);

            Preset fig2c;
            fig2c.name = "fig2c";
            fig2c.description = "dense arrays, d = 0.5 lambda, L = 2500 lambda, varying sqrt(N)";
            fig2c.side_count = 700;
            fig2c.spacing_lambda = 0.5;
            fig2c.focal_lambda = 2500.0;
            fig2c.grid = wide_grid;
            fig2c.side_count_variants = {35, 200, 700};
            p.push_back(fig2c);

            Preset fig3 = fig2b;
            fig3.name = "fig3";
            fig3.description = "synthetic measurement, 7x7, d = 15 lambda, L = 700 lambda, CI model";
            fig3.pathloss = {1.91, 1.0, 0.0};
            p.push_back(fig3);

            Preset fig5 = fig2b;
            fig5.name = "fig5";
            fig5.description = "expected power under phase noise, 7x7, d = 15 lambda, L = 700 lambda";
            fig5.sigmas = {0.0, 0.2, 0.5, 1.0};
            p.push_back(fig5);

            Preset fig6 = fig2b;
            fig6.name = "fig6";
            fig6.description = "power under rigid positional deviation dx = dy, 7x7, d = 15 lambda";
            fig6.deviations_lambda = {0.0, 0.25, 0.5, 1.0};
            p.push_back(fig6);

            Preset fig7 = fig2b;
            fig7.name = "fig7";
            fig7.description = "focal power vs deviation for several (d, sqrt(N))";
            fig7.sensitivity_lambda = {{10.0, 7}, {15.0, 7}, {10.0, 15}};
            fig7.delta_max_lambda = 1.0;
            fig7.delta_points = 21;
            p.push_back(fig7);

            return p;
        }
    }

    const std::vector<Preset> &presets()
    {
        static const std::vector<Preset> table = make_presets();
        return table;
    }

    const Preset &find_preset(std::string_view name)
    {
        for (const auto &p : presets())
            if (p.name == name)
                return p;
        std::string known;
        for (const auto &p : presets())
            known += (known.empty() ? "" : ", ") + p.name;
        throw std::invalid_argument("unknown preset '" + std::string(name) + "' (known: " + known + ")");
    }
}
