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

#include "sparsefocus/closed_form.hpp"
#include "sparsefocus/fresnel.hpp"

#include <cmath>
#include <stdexcept>

namespace sparsefocus
{
    namespace
    {
        void check_focal(double focal_distance)
        {
            if (!std::isfinite(focal_distance) || focal_distance <= 0.0)
                throw std::invalid_argument("focal distance must be finite and > 0");
        }

        double aperture_factor(const ArrayConfig &cfg)
        {
            return double(cfg.side_count()) - 1.0;
        }
    }

    double eta(double focal_distance, double l)
    {
        check_focal(focal_distance);
        check_observation_distance(l);
        return (l - focal_distance) / l;
    }

    double b_parameter(const ArrayConfig &cfg, double focal_distance, double eta)
    {
        check_focal(focal_distance);
        const double d = cfg.spacing();
        const double arg = std::abs(pi * d * d * eta / (cfg.wavelength() * focal_distance));
        return std::sqrt(arg) * 0.5 * aperture_factor(cfg);
    }

    LobeParameters lobe_parameters(const ArrayConfig &cfg, double focal_distance, double l)
    {
        const double e = eta(focal_distance, l);
        return {e, b_parameter(cfg, focal_distance, e)};
    }

    double rho(const ArrayConfig &cfg, double b, double eta)
    {
        const double a = aperture_factor(cfg);
        const double a4 = a * a * a * a;
        const double n = double(cfg.element_count());
        if (eta == 0.0)
            return a4 / n;
        if (!(b > 0.0))
            throw std::domain_error("rho: eta != 0 requires b > 0; route eta == 0 to the focal branch");
        const auto f = fresnel(b);
        const double g = f.c * f.c + f.s * f.s;
        const double b2 = b * b;
        return a4 / (n * b2 * b2) * g * g;
    }

    double approx_power(const ArrayConfig &cfg, const FocusScenario &sc, double l)
    {
        check_scenario(sc);
        const auto p = lobe_parameters(cfg, sc.focal_distance, l);
        const double lam = cfg.wavelength();
        const double q = 4.0 * pi * l;
        // A single-element array (or eta exactly 0) has b == 0: only the focal branch is defined
        const double r = (p.b == 0.0) ? rho(cfg, 0.0, 0.0) : rho(cfg, p.b, p.eta);
        return sc.transmit_power * lam * lam / (q * q) * r;
    }

    LobeExtent main_lobe_extent(const ArrayConfig &cfg, double focal_distance)
    {
        check_focal(focal_distance);
        const double a = aperture_factor(cfg);
        const double d = cfg.spacing();
        const double r = pi * d * d * a * a / (4.0 * b_min * b_min * cfg.wavelength() * focal_distance);
        LobeExtent out;
        out.ratio = r;
        if (r > 1.0)
            out.forward = focal_distance / (r - 1.0);
        out.backward = -focal_distance / (r + 1.0);
        return out;
    }
}
