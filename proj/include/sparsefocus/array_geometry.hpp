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

#ifndef SPARSEFOCUS_ARRAY_GEOMETRY_HPP
#define SPARSEFOCUS_ARRAY_GEOMETRY_HPP

#include <cstddef>
#include <vector>

namespace sparsefocus
{
    inline constexpr double pi = 3.14159265358979323846;

    // Square uniform planar array on the XY plane, centered at the origin.
    // Lengths are in meters. The wavenumber is always derived from the wavelength.
    class ArrayConfig
    {
    public:
        // Throws std::invalid_argument unless side_count >= 1, spacing > 0, wavelength > 0
        ArrayConfig(std::size_t side_count, double spacing, double wavelength);

        std::size_t side_count() const { return side_count_; }
        std::size_t element_count() const { return side_count_ * side_count_; }
        double spacing() const { return spacing_; }
        double wavelength() const { return wavelength_; }
        double wavenumber() const { return 2.0 * pi / wavelength_; }

        // Signed offset of the 1-based lattice index i from the array center, in meters
        double coordinate(std::size_t i) const;

        bool operator==(const ArrayConfig &) const = default;

    private:
        std::size_t side_count_;
        double spacing_;
        double wavelength_;
    };

    // 1-based (n, m) element index; n runs along x, m along y
    struct ElementIndex
    {
        std::size_t n = 1;
        std::size_t m = 1;
    };

    // Rigid translation of the whole lattice; the precoder keeps using nominal positions
    struct DeviationModel
    {
        double delta_x = 0.0;
        double delta_y = 0.0;
    };

    struct ElementPosition
    {
        double x;
        double y;
    };

    // Throws std::out_of_range if idx lies outside [1, side_count]^2
    void check_index(const ArrayConfig &cfg, ElementIndex idx);

    // Throws std::invalid_argument for non-finite deviations
    void check_deviation(const DeviationModel &dev);

    // True when |dx| or |dy| exceeds half the element spacing. The first-order
    // phase model is still evaluated; callers are expected to warn.
    bool deviation_outside_small_regime(const ArrayConfig &cfg, const DeviationModel &dev);

    // Row-major over (n, m): entry (n-1)*side_count + (m-1)
    std::vector<ElementPosition> element_coordinates(const ArrayConfig &cfg);

    // Distance from element (n, m) to the on-axis point (0, 0, l). Requires l > 0.
    double element_distance(const ArrayConfig &cfg, ElementIndex idx, double l);

    // Same as element_distance with the lattice shifted by (dx, dy)
    double perturbed_distance(const ArrayConfig &cfg, ElementIndex idx, double l, const DeviationModel &dev);

    // First-order phase change k (x dx + y dy) / D caused by the deviation
    double deviation_phase(const ArrayConfig &cfg, ElementIndex idx, double l, const DeviationModel &dev);

    // Throws std::invalid_argument unless l is finite and > 0
    void check_observation_distance(double l);
}

#endif
