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

#ifndef SPARSEFOCUS_PATHLOSS_HPP
#define SPARSEFOCUS_PATHLOSS_HPP

#include "sparsefocus/array_geometry.hpp"
#include "sparsefocus/field_engine.hpp"
#include "sparsefocus/power_trace.hpp"

#include <cstdint>
#include <vector>

namespace sparsefocus
{
    // Close-in reference distance model:
    //   PL[dB] = 10 ple log10(d / d0) + FSPL(d0) + X_sigma
    struct CIPathLossParams
    {
        double ple = 1.91;
        double reference_distance = 1.0;
        double shadow_sigma_db = 0.0;
    };

    void check_pathloss(const CIPathLossParams &params);

    // 20 log10(4 pi d / lambda)
    double fspl_db(double distance, double wavelength);

    // shadow_draw is X_sigma in dB, sampled by the caller (0 for the deterministic model)
    double ci_path_loss_db(const CIPathLossParams &params, double distance, double wavelength,
                           double shadow_draw = 0.0);

    // Synthetic stand-in for a measured z-axis power profile. At every grid point the
    // focused array radiates with the CI path loss taken at the on-axis distance,
    // an i.i.d. shadow draw per element (amplitude 10^(-PL/20)) and one phase-noise
    // draw per element. Grid point j uses RandomStream::substream(seed, j); per element
    // the shadow draw precedes the phase draw, and zero-sigma draws are skipped.
    // The returned trace is peak-normalized.
    PowerTrace emulate_measurement_trace(const ArrayConfig &cfg, const FocusScenario &sc,
                                         const std::vector<double> &z_grid, const CIPathLossParams &params,
                                         const PhaseNoiseModel &noise, std::uint64_t seed);
}

#endif
