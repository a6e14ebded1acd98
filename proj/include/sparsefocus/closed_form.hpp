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

#ifndef SPARSEFOCUS_CLOSED_FORM_HPP
#define SPARSEFOCUS_CLOSED_FORM_HPP

#include "sparsefocus/array_geometry.hpp"
#include "sparsefocus/field_engine.hpp"

#include <optional>

namespace sparsefocus
{
    // First local minimum of the lobe function, as published. A numerically
    // re-derived minimum of (C^2 + S^2)/b^2 is 1.91150; see the closed-form tests.
    inline constexpr double b_min = 1.9111;

    struct LobeParameters
    {
        double eta = 0.0; // (l - L) / l, in (-inf, 1) for l > 0
        double b = 0.0;   // Fresnel argument, >= 0
    };

    // Axial distances from the focal point to the first power minima.
    // forward is empty when the lobe does not close on the far side.
    struct LobeExtent
    {
        std::optional<double> forward;
        double backward = 0.0;
        double ratio = 0.0; // pi d^2 (sqrt(N)-1)^2 / (4 b_min^2 lambda L)

        bool forward_bounded() const { return forward.has_value(); }
    };

    // eta = (l - L) / l. Throws std::invalid_argument for non-positive distances.
    double eta(double focal_distance, double l);

    // b = sqrt(|pi d^2 eta / (lambda L)|) (sqrt(N) - 1) / 2
    double b_parameter(const ArrayConfig &cfg, double focal_distance, double eta);

    LobeParameters lobe_parameters(const ArrayConfig &cfg, double focal_distance, double l);

    // Focusing factor. eta == 0 gives (sqrt(N)-1)^4 / N; otherwise
    // (sqrt(N)-1)^4 / (N b^4) (C(b)^2 + S(b)^2)^2. Throws std::domain_error for
    // eta != 0 with b == 0, which has to be routed to the eta == 0 branch.
    double rho(const ArrayConfig &cfg, double b, double eta);

    // P lambda^2 / (4 pi l)^2 * rho
    double approx_power(const ArrayConfig &cfg, const FocusScenario &sc, double l);

    LobeExtent main_lobe_extent(const ArrayConfig &cfg, double focal_distance);
}

#endif
