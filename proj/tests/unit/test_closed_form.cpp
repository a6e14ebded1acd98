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
#include "sparsefocus/field_engine.hpp"

#include "../support/oracle.hpp"

#include <boost/math/tools/roots.hpp>
#include <doctest.h>

#include <cmath>
#include <iomanip>
#include <stdexcept>

using namespace sparsefocus;

namespace
{
    constexpr double lam = 2.998e8 / 300e9;
    const ArrayConfig sparse7(7, 15 * lam, lam);
    const FocusScenario at700{700 * lam, 1.0};
}

TEST_CASE("eta")
{
    const double L = 0.7;
    CHECK(eta(L, L) == 0.0);
    CHECK(eta(L, 2 * L) == 0.5);
    CHECK(eta(L, 1e12) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eta(L, L / 2) == -1.0);
    CHECK_THROWS_AS(eta(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(eta(L, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(eta(L, -2.0), std::invalid_argument);
}

TEST_CASE("b parameter")
{
    const double L = 700 * lam;
    CHECK(b_parameter(sparse7, L, 0.0) == 0.0);
    CHECK(b_parameter(ArrayConfig(1, 15 * lam, lam), L, 0.4) == 0.0);
    // sqrt(pi * 225 / 700 * 0.5) * 3
    CHECK(b_parameter(sparse7, L, 0.5) == doctest::Approx(std::sqrt(pi * 225.0 / 1400.0) * 3.0).epsilon(1e-14));
    CHECK(b_parameter(sparse7, L, 0.5) == doctest::Approx(2.1318).epsilon(1e-4));
    CHECK(b_parameter(sparse7, L, -0.5) == b_parameter(sparse7, L, 0.5));
}

TEST_CASE("rho")
{
    CHECK(rho(sparse7, 0.0, 0.0) == doctest::Approx(1296.0 / 49.0).epsilon(1e-15));
    CHECK(1296.0 / 49.0 == doctest::Approx(26.449).epsilon(1e-4));

    // far tail: C, S -> 1/2 so rho -> 0.25 (sqrt(N)-1)^4 / (N b^4)
    const double b = 1e4;
    CHECK(rho(sparse7, b, 0.3) == doctest::Approx(0.25 * 1296.0 / (49.0 * std::pow(b, 4))).epsilon(1e-3));

    // the two branches meet as b -> 0
    const double gap = std::abs(rho(sparse7, 1e-3, 1e-9) / rho(sparse7, 0.0, 0.0) - 1);
    CHECK(gap <= 1e-5);

    CHECK_THROWS_AS(rho(sparse7, 0.0, 0.2), std::domain_error);
    CHECK_THROWS_AS(rho(sparse7, -1.0, 0.2), std::domain_error);
}

TEST_CASE("approx power at the focal point")
{
    const double L = at700.focal_distance;
    const double expect = lam * lam / std::pow(4 * pi * L, 2) * 1296.0 / 49.0;
    CHECK(approx_power(sparse7, at700, L) == doctest::Approx(expect).epsilon(1e-14));
    const double ratio = approx_power(sparse7, at700, L) / received_power(sparse7, at700, L);
    CHECK(std::abs(ratio / (1296.0 / (49.0 * 49.0)) - 1) <= 1e-12);

    const ArrayConfig one(1, 15 * lam, lam);
    CHECK(approx_power(one, at700, 300 * lam) == 0.0);
    CHECK_THROWS_AS(approx_power(sparse7, at700, 0.0), std::invalid_argument);
}

TEST_CASE("main lobe extent")
{
    const auto e = main_lobe_extent(sparse7, 700 * lam);
    REQUIRE(e.forward_bounded());
    CHECK(e.ratio == doctest::Approx(2.4883).epsilon(1e-4));
    CHECK(std::abs(*e.forward / lam - 470.3) <= 0.05);
    CHECK(std::abs(e.backward / lam + 200.7) <= 0.05); // quoted to one decimal

    // b at either predicted edge is b_min by construction
    CHECK(lobe_parameters(sparse7, 700 * lam, 700 * lam + *e.forward).b == doctest::Approx(b_min).epsilon(1e-12));
    CHECK(lobe_parameters(sparse7, 700 * lam, 700 * lam + e.backward).b == doctest::Approx(b_min).epsilon(1e-12));

    const auto one = main_lobe_extent(ArrayConfig(1, 15 * lam, lam), 0.7);
    CHECK(one.ratio == 0.0);
    CHECK_FALSE(one.forward_bounded());
    CHECK(one.backward == -0.7);

    // doubling d quadruples the ratio
    const auto wide = main_lobe_extent(ArrayConfig(7, 30 * lam, lam), 700 * lam);
    CHECK(wide.ratio == doctest::Approx(4 * e.ratio).epsilon(1e-14));
    CHECK(*wide.forward < *e.forward);

    // dense 7x7 never closes the forward side
    CHECK_FALSE(main_lobe_extent(ArrayConfig(7, 0.5 * lam, lam), 700 * lam).forward_bounded());
}

TEST_CASE("first minimum of the lobe function")
{
    // g(b) = (C^2 + S^2) / b^2 is stationary where b (C cos + S sin)(pi b^2 / 2) = C^2 + S^2
    auto stationary = [](double b)
    {
        const auto f = oracle::fresnel(b);
        const double arg = M_PI * b * b / 2;
        return b * (f.c * std::cos(arg) + f.s * std::sin(arg)) - (f.c * f.c + f.s * f.s);
    };
    boost::uintmax_t iters = 100;
    const auto r = boost::math::tools::toms748_solve(stationary, 1.7, 2.1, boost::math::tools::eps_tolerance<double>(45),
                                                     iters);
    const double root = 0.5 * (r.first + r.second);
    MESSAGE("re-derived first minimum at b = " << std::setprecision(12) << root);
    // 1.9115004451711 by 40-digit evaluation
    CHECK(root == doctest::Approx(1.9115004451711).epsilon(1e-10));
    CHECK(std::round(root * 1e4) / 1e4 == 1.9115);
    // the published constant is a close but not exact transcription
    CHECK(std::abs(b_min - root) < 5e-4);
    CHECK(b_min == 1.9111);
}
