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

#include "sparsefocus/sweeps.hpp"
#include "sparsefocus/closed_form.hpp"
#include "sparsefocus/parallel.hpp"
#include "sparsefocus/random_stream.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace sparsefocus
{
    namespace
    {
        template <class... Ts>
        struct overloaded : Ts...
        {
            using Ts::operator()...;
        };
        template <class... Ts>
        overloaded(Ts...) -> overloaded<Ts...>;

        PowerTrace empty_trace(const ArrayConfig &cfg, const FocusScenario &sc, const std::vector<double> &grid,
                               ModelTag tag)
        {
            PowerTrace t;
            t.grid = grid;
            t.values.resize(grid.size());
            t.tag = tag;
            t.config = ConfigSnapshot::from(cfg, sc);
            return t;
        }

        void record_deviation(ConfigSnapshot &s, const DeviationModel &dev)
        {
            s.model_parameters["delta_x"] = dev.delta_x;
            s.model_parameters["delta_y"] = dev.delta_y;
        }

        // Linear interpolation of (grid, values) at l; l must lie inside the grid
        double interpolate(const std::vector<double> &grid, const std::vector<double> &values, double l)
        {
            auto it = std::lower_bound(grid.begin(), grid.end(), l);
            const auto j = std::size_t(it - grid.begin());
            if (j < grid.size() && grid[j] == l)
                return values[j];
            const double t = (l - grid[j - 1]) / (grid[j] - grid[j - 1]);
            return values[j - 1] + t * (values[j] - values[j - 1]);
        }
    }

    ModelTag tag_of(const ModelSpec &model)
    {
        return std::visit(overloaded{
                              [](const ExactModel &) { return ModelTag::exact; },
                              [](const ClosedFormModel &) { return ModelTag::closed_form; },
                              [](const NoisyExpectationModel &) { return ModelTag::noisy_expectation; },
                              [](const NoisyMonteCarloModel &) { return ModelTag::noisy_mc; },
                              [](const DeviatedModel &) { return ModelTag::deviated; },
                              [](const DeviatedTaylorModel &) { return ModelTag::deviated_taylor; },
                              [](const EmulatedModel &) { return ModelTag::emulated; },
                          },
                          model);
    }

    PowerTrace z_sweep(const ArrayConfig &cfg, const FocusScenario &sc, const std::vector<double> &grid,
                       const ModelSpec &model)
    {
        check_grid(grid);
        check_scenario(sc);

        if (const auto *em = std::get_if<EmulatedModel>(&model))
            return emulate_measurement_trace(cfg, sc, grid, em->pathloss, em->noise, em->seed);

        const FocusedArray array(cfg, sc);
        PowerTrace t = empty_trace(cfg, sc, grid, tag_of(model));
        auto &v = t.values;

        std::visit(overloaded{
                       [&](const ExactModel &)
                       {
                           parallel_for(grid.size(), [&](std::size_t j)
                                        { v[j] = array.power(grid[j]); });
                       },
                       [&](const ClosedFormModel &)
                       {
                           for (std::size_t j = 0; j < grid.size(); ++j)
                               v[j] = approx_power(cfg, sc, grid[j]);
                       },
                       [&](const NoisyExpectationModel &m)
                       {
                           check_noise(m.noise);
                           t.config.model_parameters["sigma_phi"] = m.noise.sigma_phi;
                           parallel_for(grid.size(), [&](std::size_t j)
                                        { v[j] = array.expected_noisy_power(grid[j], m.noise); });
                       },
                       [&](const NoisyMonteCarloModel &m)
                       {
                           check_noise(m.noise);
                           t.config.model_parameters["sigma_phi"] = m.noise.sigma_phi;
                           t.config.seed = m.seed;
                           t.config.trials = m.trials;
                           // trials run in parallel inside each point
                           for (std::size_t j = 0; j < grid.size(); ++j)
                               v[j] = array.monte_carlo_power(grid[j], m.noise, m.trials, mix64(m.seed) + j).mean;
                       },
                       [&](const DeviatedModel &m)
                       {
                           record_deviation(t.config, m.deviation);
                           parallel_for(grid.size(), [&](std::size_t j)
                                        { v[j] = array.deviated_power(grid[j], m.deviation); });
                       },
                       [&](const DeviatedTaylorModel &m)
                       {
                           record_deviation(t.config, m.deviation);
                           parallel_for(grid.size(), [&](std::size_t j)
                                        { v[j] = array.deviated_taylor_power(grid[j], m.deviation); });
                       },
                       [&](const EmulatedModel &) {},
                   },
                   model);
        return t;
    }

    Peak find_peak(const PowerTrace &trace)
    {
        if (trace.grid.empty() || trace.values.size() != trace.grid.size())
            throw std::invalid_argument("find_peak: trace must be non-empty with matching lengths");
        std::size_t best = 0;
        for (std::size_t i = 1; i < trace.values.size(); ++i)
            if (trace.values[i] > trace.values[best])
                best = i;
        return {trace.grid[best], trace.values[best], best};
    }

    LobeMinima find_lobe_minima(const PowerTrace &trace, double focal)
    {
        trace.validate();
        const auto &g = trace.grid;
        const auto &v = trace.values;
        if (!(g.front() < focal && g.back() > focal))
            throw std::invalid_argument("find_lobe_minima: grid must span both sides of the focal distance");

        const auto is_min = [&](std::size_t i)
        { return i > 0 && i + 1 < v.size() && v[i] < v[i - 1] && v[i] < v[i + 1]; };

        // first index with g >= focal
        const auto split = std::size_t(std::lower_bound(g.begin(), g.end(), focal) - g.begin());
        LobeMinima out;
        for (std::size_t i = split; i-- > 0;)
            if (is_min(i))
            {
                out.l_minus = g[i];
                break;
            }
        for (std::size_t i = split; i < g.size(); ++i)
            if (g[i] > focal && is_min(i))
            {
                out.l_plus = g[i];
                break;
            }
        return out;
    }

    TraceComparison compare_traces(const PowerTrace &a, const PowerTrace &b, const CompareOptions &opt)
    {
        a.validate();
        b.validate();
        if (!opt.allow_cross_config && !a.config.same_geometry(b.config))
            throw std::invalid_argument("compare_traces: traces come from different array/focus configurations");
        if (a.grid.back() < b.grid.front() || b.grid.back() < a.grid.front())
            throw std::invalid_argument("compare_traces: grids are disjoint");

        const PowerTrace an = opt.normalize ? peak_normalized(a) : a;
        const PowerTrace bn = opt.normalize ? peak_normalized(b) : b;
        const bool same_grid = a.grid == b.grid;

        TraceComparison out;
        double sum_sq = 0.0;
        for (std::size_t i = 0; i < an.grid.size(); ++i)
        {
            const double l = an.grid[i];
            if (opt.window && (l < opt.window->first || l > opt.window->second))
                continue;
            if (l < bn.grid.front() || l > bn.grid.back())
                continue;
            const double ref = an.values[i];
            const double other = same_grid ? bn.values[i] : interpolate(bn.grid, bn.values, l);
            const double diff = std::abs(other - ref);
            const double rel = diff == 0.0 ? 0.0 : diff / std::abs(ref);
            out.max_relative_error = std::max(out.max_relative_error, rel);
            sum_sq += rel * rel;
            ++out.points;
        }
        if (out.points == 0)
            throw std::invalid_argument("compare_traces: no common grid points inside the comparison window");
        out.rms_relative_error = std::sqrt(sum_sq / double(out.points));
        out.peak_shift = std::abs(find_peak(a).l - find_peak(b).l);
        return out;
    }

    std::vector<PowerTrace> noise_sweep(const ArrayConfig &cfg, const FocusScenario &sc,
                                        const std::vector<double> &grid, const std::vector<double> &sigmas)
    {
        check_grid(grid);
        for (double s : sigmas)
            check_noise({s});
        const FocusedArray array(cfg, sc);
        // exact power and incoherent level are shared by all sigmas
        std::vector<double> exact(grid.size()), incoherent(grid.size());
        parallel_for(grid.size(), [&](std::size_t j)
                     {
            exact[j] = array.power(grid[j]);
            incoherent[j] = array.beta(grid[j]) * double(cfg.element_count()); });

        std::vector<PowerTrace> out;
        out.reserve(sigmas.size());
        for (double s : sigmas)
        {
            PowerTrace t = empty_trace(cfg, sc, grid, ModelTag::noisy_expectation);
            t.config.model_parameters["sigma_phi"] = s;
            const double mu = coherence_factor({s});
            const double mu2 = mu * mu;
            for (std::size_t j = 0; j < grid.size(); ++j)
                t.values[j] = mu2 * exact[j] + incoherent[j] * (1.0 - mu2);
            out.push_back(std::move(t));
        }
        return out;
    }

    std::vector<PowerTrace> deviation_sweep(const ArrayConfig &cfg, const FocusScenario &sc,
                                            const std::vector<double> &grid,
                                            const std::vector<DeviationModel> &deviations, bool taylor)
    {
        std::vector<PowerTrace> out;
        out.reserve(deviations.size());
        for (const auto &dev : deviations)
        {
            if (taylor)
                out.push_back(z_sweep(cfg, sc, grid, DeviatedTaylorModel{dev}));
            else
                out.push_back(z_sweep(cfg, sc, grid, DeviatedModel{dev}));
        }
        return out;
    }

    std::optional<std::size_t> SensitivityTable::first_column_below(double threshold) const
    {
        for (std::size_t j = 0; j < deltas.size(); ++j)
            for (const auto &row : normalized_power)
                if (row[j] < threshold)
                    return j;
        return std::nullopt;
    }

    SensitivityTable sensitivity_sweep(double wavelength, const FocusScenario &sc,
                                       const std::vector<SensitivityConfig> &configs,
                                       const std::vector<double> &deltas)
    {
        check_scenario(sc);
        for (double d : deltas)
            if (!std::isfinite(d))
                throw std::invalid_argument("sensitivity_sweep: deltas must be finite");
        SensitivityTable table;
        table.wavelength = wavelength;
        table.scenario = sc;
        table.configs = configs;
        table.deltas = deltas;
        for (const auto &c : configs)
        {
            const FocusedArray array(ArrayConfig(c.side_count, c.spacing, wavelength), sc);
            const double reference = array.focal_deviated_power({});
            std::vector<double> row(deltas.size());
            for (std::size_t j = 0; j < deltas.size(); ++j)
                row[j] = array.focal_deviated_power({deltas[j], deltas[j]}) / reference;
            table.normalized_power.push_back(std::move(row));
        }
        return table;
    }

    FocusingVerdict classify_focusing(const PowerTrace &trace, double threshold_db)
    {
        const auto peak = find_peak(trace);
        const double edge = trace.values.back();
        FocusingVerdict out;
        out.peak_index = peak.index;
        out.margin_db = (edge > 0.0) ? 10.0 * std::log10(peak.value / edge) : std::numeric_limits<double>::infinity();
        out.focusing = peak.index != 0 && out.margin_db >= threshold_db;
        return out;
    }
}
