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

#ifndef SPARSEFOCUS_FIELD_ENGINE_HPP
#define SPARSEFOCUS_FIELD_ENGINE_HPP

#include "sparsefocus/array_geometry.hpp"
#include "sparsefocus/random_stream.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sparsefocus
{
    // Focal point (0, 0, focal_distance) and total transmit power in watts
    struct FocusScenario
    {
        double focal_distance = 1.0;
        double transmit_power = 1.0;
    };

    // Zero-mean i.i.d. Gaussian phase noise per element, standard deviation in radians
    struct PhaseNoiseModel
    {
        double sigma_phi = 0.0;
    };

    // The N-term phasor sum sum_{n,m} exp(i alpha_{n,m}); |value| <= element_count
    struct ComplexFieldSum
    {
        std::complex<double> value;
        std::size_t element_count = 0;

        double magnitude_squared() const { return std::norm(value); }
    };

    struct MonteCarloEstimate
    {
        double mean = 0.0;
        double standard_error = 0.0;
        std::size_t trials = 0;
    };

    // Per-element precoding phases, 1-based (n, m) access
    class PhaseMatrix
    {
    public:
        PhaseMatrix(std::size_t side_count, std::vector<double> values);

        std::size_t side_count() const { return side_; }
        double operator()(std::size_t n, std::size_t m) const;
        const std::vector<double> &values() const { return values_; }

    private:
        std::size_t side_;
        std::vector<double> values_; // row-major over (n, m)
    };

    void check_scenario(const FocusScenario &sc);
    void check_noise(const PhaseNoiseModel &noise);

    // Array focused on a scenario with per-element geometry cached. All phasor sums
    // accumulate in row-major (n, m) order with compensated summation.
    class FocusedArray
    {
    public:
        FocusedArray(const ArrayConfig &cfg, const FocusScenario &sc);

        const ArrayConfig &config() const { return cfg_; }
        const FocusScenario &scenario() const { return sc_; }

        // beta_l = P lambda^2 / (N (4 pi l)^2)
        double beta(double l) const;

        // k (D_{n,m}^l - D_{n,m}^L) per element, row-major
        std::vector<double> residual_phases(double l) const;

        ComplexFieldSum field_sum(double l) const;
        ComplexFieldSum noisy_field_sum(double l, double sigma_phi, RandomStream &rng) const;
        ComplexFieldSum deviated_field_sum(double l, const DeviationModel &dev) const;
        ComplexFieldSum deviated_taylor_field_sum(double l, const DeviationModel &dev) const;
        // sum exp(i dphi_{n,m}) with the deviation phase taken at the focal distance
        ComplexFieldSum focal_deviation_sum(const DeviationModel &dev) const;

        double power(double l) const;
        double expected_noisy_power(double l, const PhaseNoiseModel &noise) const;
        double sample_noisy_power(double l, const PhaseNoiseModel &noise, RandomStream &rng) const;
        MonteCarloEstimate monte_carlo_power(double l, const PhaseNoiseModel &noise, std::size_t trials,
                                             std::uint64_t seed) const;
        double deviated_power(double l, const DeviationModel &dev) const;
        double deviated_taylor_power(double l, const DeviationModel &dev) const;
        double focal_deviated_power(const DeviationModel &dev) const;

    private:
        ArrayConfig cfg_;
        FocusScenario sc_;
        std::vector<double> x_;       // per element, row-major
        std::vector<double> y_;       // per element, row-major
        std::vector<double> r2_;      // x^2 + y^2
        std::vector<double> d_focal_; // distance to the focal point
    };

    // phi_{n,m} = -k D_{n,m}^L
    PhaseMatrix precoding_phases(const ArrayConfig &cfg, const FocusScenario &sc);

    // -(lambda / (4 pi l)) exp(i k D_{n,m}^l); amplitude taken on-axis for every element
    std::complex<double> channel_coefficient(const ArrayConfig &cfg, ElementIndex idx, double l);

    double received_power(const ArrayConfig &cfg, const FocusScenario &sc, double l);

    // mu = exp(-sigma^2 / 2)
    double coherence_factor(const PhaseNoiseModel &noise);

    // mu^2 P_l + beta_l N (1 - mu^2)
    double expected_power_noisy(const ArrayConfig &cfg, const FocusScenario &sc, double l,
                                const PhaseNoiseModel &noise);

    // One realization; N normal draws are taken from rng in row-major order
    double sample_power_noisy(const ArrayConfig &cfg, const FocusScenario &sc, double l,
                              const PhaseNoiseModel &noise, RandomStream &rng);

    // Trial t uses RandomStream::substream(seed, t), so the estimate is independent of
    // thread count and the first n trials of a larger run are the same draws.
    // Throws std::invalid_argument when trials < 2.
    MonteCarloEstimate monte_carlo_expected_power(const ArrayConfig &cfg, const FocusScenario &sc, double l,
                                                  const PhaseNoiseModel &noise, std::size_t trials,
                                                  std::uint64_t seed);

    double received_power_deviated(const ArrayConfig &cfg, const FocusScenario &sc, double l,
                                   const DeviationModel &dev);
    double received_power_deviated_taylor(const ArrayConfig &cfg, const FocusScenario &sc, double l,
                                          const DeviationModel &dev);
    double focal_power_deviated(const ArrayConfig &cfg, const FocusScenario &sc, const DeviationModel &dev);
}

#endif
