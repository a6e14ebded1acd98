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

#include "sparsefocus/pathloss.hpp"
#include "sparsefocus/compensated_sum.hpp"
#include "sparsefocus/parallel.hpp"
#include "sparsefocus/random_stream.hpp"

#include <cmath>
#include <stdexcept>

namespace sparsefocus
{
    void check_pathloss(const CIPathLossParams &p)
    {
        if (!std::isfinite(p.ple) || p.ple <= 0.0)
            throw std::invalid_argument("CIPathLossParams: ple must be > 0");
        if (!std::isfinite(p.reference_distance) || p.reference_distance <= 0.0)
            throw std::invalid_argument("CIPathLossParams: reference_distance must be > 0");
        if (!std::isfinite(p.shadow_sigma_db) || p.shadow_sigma_db < 0.0)
            throw std::invalid_argument("CIPathLossParams: shadow_sigma_db must be >= 0");
    }

    double fspl_db(double distance, double wavelength)
    {
        if (!std::isfinite(distance) || distance <= 0.0)
            throw std::invalid_argument("fspl_db: distance must be > 0");
        if (!std::isfinite(wavelength) || wavelength <= 0.0)
            throw std::invalid_argument("fspl_db: wavelength must be > 0");
        return 20.0 * std::log10(4.0 * pi * distance / wavelength);
    }

    double ci_path_loss_db(const CIPathLossParams &params, double distance, double wavelength, double shadow_draw)
    {
        check_pathloss(params);
        if (!std::isfinite(distance) || distance <= 0.0)
            throw std::invalid_argument("ci_path_loss_db: distance must be > 0");
        return 10.0 * params.ple * std::log10(distance / params.reference_distance) +
               fspl_db(params.reference_distance, wavelength) + shadow_draw;
    }

    PowerTrace emulate_measurement_trace(const ArrayConfig &cfg, const FocusScenario &sc,
                                         const std::vector<double> &z_grid, const CIPathLossParams &params,
                                         const PhaseNoiseModel &noise, std::uint64_t seed)
    {
        check_grid(z_grid);
        check_pathloss(params);
        check_noise(noise);
        const FocusedArray array(cfg, sc);
        const double per_element_power = sc.transmit_power / double(cfg.element_count());
        const double shadow_sigma = params.shadow_sigma_db;
        const double phase_sigma = noise.sigma_phi;

        PowerTrace trace;
        trace.grid = z_grid;
        trace.values.resize(z_grid.size());
        trace.tag = ModelTag::emulated;
        trace.config = ConfigSnapshot::from(cfg, sc);
        trace.config.model_parameters = {{"ple", params.ple},
                                         {"reference_distance", params.reference_distance},
                                         {"shadow_sigma_db", shadow_sigma},
                                         {"sigma_phi", phase_sigma}};
        trace.config.seed = seed;

        parallel_for(z_grid.size(), [&](std::size_t j)
                     {
            const double l = z_grid[j];
            auto rng = RandomStream::substream(seed, j);
            const double common_db = ci_path_loss_db(params, l, cfg.wavelength());
            const auto phases = array.residual_phases(l);
            CompensatedComplexSum acc;
            for (double theta : phases)
            {
                const double shadow = shadow_sigma > 0.0 ? rng.normal(shadow_sigma) : 0.0;
                const double phase = phase_sigma > 0.0 ? rng.normal(phase_sigma) : 0.0;
                acc.add(std::polar(std::pow(10.0, -shadow / 20.0), theta + phase));
            }
            const double amp2 = std::pow(10.0, -common_db / 10.0);
            trace.values[j] = per_element_power * amp2 * std::norm(acc.value()); });

        return peak_normalized(trace);
    }
}
