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

#ifndef SPARSEFOCUS_SWEEPS_HPP
#define SPARSEFOCUS_SWEEPS_HPP

#include "sparsefocus/array_geometry.hpp"
#include "sparsefocus/field_engine.hpp"
#include "sparsefocus/pathloss.hpp"
#include "sparsefocus/power_trace.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace sparsefocus
{
    struct ExactModel
    {
    };
    struct ClosedFormModel
    {
    };
    struct NoisyExpectationModel
    {
        PhaseNoiseModel noise;
    };
    struct NoisyMonteCarloModel
    {
        PhaseNoiseModel noise;
        std::size_t trials = 0;
        std::uint64_t seed = 0;
    };
    struct DeviatedModel
    {
        DeviationModel deviation;
    };
    struct DeviatedTaylorModel
    {
        DeviationModel deviation;
    };
    struct EmulatedModel
    {
        CIPathLossParams pathloss;
        PhaseNoiseModel noise;
        std::uint64_t seed = 0;
    };

    using ModelSpec = std::variant<ExactModel, ClosedFormModel, NoisyExpectationModel, NoisyMonteCarloModel,
                                   DeviatedModel, DeviatedTaylorModel, EmulatedModel>;

    ModelTag tag_of(const ModelSpec &model);

    // One value per grid point from the selected model. Grid points are evaluated
    // in parallel; values land by index. Monte Carlo grid point j uses
    // seed mix64(seed) + j. The emulated model returns a peak-normalized trace.
    PowerTrace z_sweep(const ArrayConfig &cfg, const FocusScenario &sc, const std::vector<double> &grid,
                       const ModelSpec &model);

    struct Peak
    {
        double l = 0.0;
        double value = 0.0;
        std::size_t index = 0;
    };

    // Grid point of the maximum value; ties go to the smaller l
    Peak find_peak(const PowerTrace &trace);

    // Nearest strict local minima (lower than both neighbours) on each side of the focal
    // distance. An empty side means the lobe is unbounded within the grid.
    struct LobeMinima
    {
        std::optional<double> l_minus;
        std::optional<double> l_plus;

        bool bounded() const { return l_minus && l_plus; }
    };

    // Throws std::invalid_argument unless the grid has points on both sides of focal
    LobeMinima find_lobe_minima(const PowerTrace &trace, double focal);

    struct TraceComparison
    {
        double max_relative_error = 0.0;
        double rms_relative_error = 0.0;
        double peak_shift = 0.0;
        std::size_t points = 0;
    };

    struct CompareOptions
    {
        bool normalize = true;                              // scale each trace to unit peak first
        std::optional<std::pair<double, double>> window;     // restrict errors to [lo, hi]
        bool allow_cross_config = false;
    };

    // Pointwise relative error |b - a| / a on a's grid. If the grids differ, b is
    // linearly interpolated in l onto the points of a inside b's range. The peak shift
    // uses the full traces. Throws std::invalid_argument for disjoint grids, an empty
    // comparison window, or different array/focus snapshots unless allow_cross_config.
    TraceComparison compare_traces(const PowerTrace &a, const PowerTrace &b, const CompareOptions &opt = {});

    // One noisy_expectation trace per sigma
    std::vector<PowerTrace> noise_sweep(const ArrayConfig &cfg, const FocusScenario &sc,
                                        const std::vector<double> &grid, const std::vector<double> &sigmas);

    // One deviated (or deviated_taylor) trace per deviation
    std::vector<PowerTrace> deviation_sweep(const ArrayConfig &cfg, const FocusScenario &sc,
                                            const std::vector<double> &grid,
                                            const std::vector<DeviationModel> &deviations, bool taylor = false);

    struct SensitivityConfig
    {
        double spacing = 0.0;
        std::size_t side_count = 1;
    };

    // rows: configs, columns: deltas, entries P_{L,d}(dd) / P_{L,d}(0) with dx = dy = dd
    struct SensitivityTable
    {
        double wavelength = 0.0;
        FocusScenario scenario;
        std::vector<SensitivityConfig> configs;
        std::vector<double> deltas;
        std::vector<std::vector<double>> normalized_power;

        // First column where any entry drops below threshold
        std::optional<std::size_t> first_column_below(double threshold) const;
    };

    SensitivityTable sensitivity_sweep(double wavelength, const FocusScenario &sc,
                                       const std::vector<SensitivityConfig> &configs,
                                       const std::vector<double> &deltas);

    struct FocusingVerdict
    {
        bool focusing = false;
        std::size_t peak_index = 0;
        double margin_db = 0.0; // peak over right-edge value
    };

    // A trace focuses when its argmax is not the first grid point and the peak exceeds
    // the right-edge value by at least threshold_db
    FocusingVerdict classify_focusing(const PowerTrace &trace, double threshold_db = 3.0);
}

#endif
