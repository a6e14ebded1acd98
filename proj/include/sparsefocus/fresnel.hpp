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

#ifndef SPARSEFOCUS_FRESNEL_HPP
#define SPARSEFOCUS_FRESNEL_HPP

namespace sparsefocus
{
    struct FresnelPair
    {
        double c; // C(x) = int_0^x cos(pi t^2 / 2) dt
        double s; // S(x) = int_0^x sin(pi t^2 / 2) dt
    };

    // Both integrals at once. Throws std::domain_error for non-finite x.
    FresnelPair fresnel(double x);

    double fresnel_c(double x);
    double fresnel_s(double x);
}

#endif
