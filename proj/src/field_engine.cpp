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

#include "sparsefocus/field_engine.hpp"
#include "sparsefocus/compensated_sum.hpp"
#include "sparsefocus/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sparsefocus
{
    PhaseMatrix::PhaseMatrix(std::size_t side_count, std::vector<double> values)
        : side_(side_count), values_(std::move(values))
    {
        if (values_.size() != side_ * side_)
            throw std::invalid_argument("PhaseMatrix: value count must equal side_count^2");
    }

    double PhaseMatrix::operator()(std::size_t n, std::size_t m) const
    {
        if (n < 1 || n > side_ || m < 1 || m > side_)
            throw std::out_of_range("PhaseMatrix: index outside [1, side_count]");
        return values_[(n - 1) * side_ + (m - 1)];
    }

    void check_scenario(const FocusScenario &sc)
    {
        if (!std::isfinite(sc.focal_distance) || sc.focal_distance <= 0.0)
            throw std::invalid_argument("FocusScenario: focal_distance must be finite and > 0");
        if (!std::isfinite(sc.transmit_power) || sc.transmit_power <= 0.0)
            throw std::invalid_argument("FocusScenario: transmit_power must be finite and > 0");
    }

    void check_noise(const PhaseNoiseModel &noise)
    {
        if (!(noise.sigma_phi >= 0.0) || std::isnan(noise.sigma_phi))
            throw std::invalid_argument("PhaseNoiseModel: sigma_phi must be >= 0");
    }

    FocusedArray::FocusedArray(const ArrayConfig &cfg, const FocusScenario &sc) : cfg_(cfg), sc_(sc)
    {
        check_scenario(sc);
        const auto s = cfg.side_count();
        const auto count = cfg.element_count();
        x_.reserve(count);
        y_.reserve(count);
        r2_.reserve(count);
        d_focal_.reserve(count);
        const double L = sc.focal_distance;
        for (std::size_t n = 1; n <= s; ++n)
        {
            const double x = cfg.coordinate(n);
            for (std::size_t m = 1; m <= s; ++m)
            {
                const double y = cfg.coordinate(m);
                x_.push_back(x);
                y_.push_back(y);
                r2_.push_back(x * x + y * y);
                d_focal_.push_back(std::sqrt(x * x + y * y + L * L));
            }
        }
    }

    double FocusedArray::beta(double l) const
    {
        check_observation_distance(l);
        const double lam = cfg_.wavelength();
        const double q = 4.0 * pi * l;
        return sc_.transmit_power * lam * lam / (double(cfg_.element_count()) * q * q);
    }

    std::vector<double> FocusedArray::residual_phases(double l) const
    {
        check_observation_distance(l);
        const double k = cfg_.wavenumber();
        const double L = sc_.focal_distance;
        const double dl2 = (l - L) * (l + L);
        const double l2 = l * l;
        std::vector<double> out(r2_.size());
        for (std::size_t i = 0; i < r2_.size(); ++i)
            out[i] = k * dl2 / (std::sqrt(r2_[i] + l2) + d_focal_[i]);
        return out;
    }

    // Residual phase k (D_l - D_L) = k (l^2 - L^2) / (D_l + D_L); exactly zero at l = L
    ComplexFieldSum FocusedArray::field_sum(double l) const
    {
        check_observation_distance(l);
        const double k = cfg_.wavenumber();
        const double L = sc_.focal_distance;
        const double dl2 = (l - L) * (l + L);
        const double l2 = l * l;
        CompensatedComplexSum acc;
        for (std::size_t i = 0; i < r2_.size(); ++i)
        {
            const double d = std::sqrt(r2_[i] + l2);
            acc.add_polar(k * dl2 / (d + d_focal_[i]));
        }
        return {acc.value(), r2_.size()};
    }

    ComplexFieldSum FocusedArray::noisy_field_sum(double l, double sigma_phi, RandomStream &rng) const
    {
        check_observation_distance(l);
        const double k = cfg_.wavenumber();
        const double L = sc_.focal_distance;
        const double dl2 = (l - L) * (l + L);
        const double l2 = l * l;
        CompensatedComplexSum acc;
        for (std::size_t i = 0; i < r2_.size(); ++i)
        {
            const double d = std::sqrt(r2_[i] + l2);
            acc.add_polar(k * dl2 / (d + d_focal_[i]) + rng.normal(sigma_phi));
        }
        return {acc.value(), r2_.size()};
    }

    ComplexFieldSum FocusedArray::deviated_field_sum(double l, const DeviationModel &dev) const
    {
        check_observation_distance(l);
        check_deviation(dev);
        const double k = cfg_.wavenumber();
        const double L = sc_.focal_distance;
        const double dl2 = (l - L) * (l + L);
        const double l2 = l * l;
        const double dx = dev.delta_x, dy = dev.delta_y;
        CompensatedComplexSum acc;
        for (std::size_t i = 0; i < r2_.size(); ++i)
        {
            const double xp = x_[i] + dx, yp = y_[i] + dy;
            const double d_pert = std::sqrt(xp * xp + yp * yp + l2);
            // D'^2 - D_L^2 without forming the large squares
            const double num = dx * (2.0 * x_[i] + dx) + dy * (2.0 * y_[i] + dy) + dl2;
            acc.add_polar(k * num / (d_pert + d_focal_[i]));
        }
        return {acc.value(), r2_.size()};
    }

    ComplexFieldSum FocusedArray::deviated_taylor_field_sum(double l, const DeviationModel &dev) const
    {
        check_observation_distance(l);
        check_deviation(dev);
        const double k = cfg_.wavenumber();
        const double L = sc_.focal_distance;
        const double dl2 = (l - L) * (l + L);
        const double l2 = l * l;
        CompensatedComplexSum acc;
        for (std::size_t i = 0; i < r2_.size(); ++i)
        {
            const double d = std::sqrt(r2_[i] + l2);
            const double dphi = k * (x_[i] * dev.delta_x + y_[i] * dev.delta_y) / d;
            acc.add_polar(k * dl2 / (d + d_focal_[i]) + dphi);
        }
        return {acc.value(), r2_.size()};
    }

    ComplexFieldSum FocusedArray::focal_deviation_sum(const DeviationModel &dev) const
    {
        check_deviation(dev);
        const double k = cfg_.wavenumber();
        CompensatedComplexSum acc;
        for (std::size_t i = 0; i < r2_.size(); ++i)
            acc.add_polar(k * (x_[i] * dev.delta_x + y_[i] * dev.delta_y) / d_focal_[i]);
        return {acc.value(), r2_.size()};
    }

    double FocusedArray::power(double l) const
    {
        return beta(l) * field_sum(l).magnitude_squared();
    }

    double FocusedArray::expected_noisy_power(double l, const PhaseNoiseModel &noise) const
    {
        check_noise(noise);
        const double mu = coherence_factor(noise);
        const double mu2 = mu * mu;
        return mu2 * power(l) + beta(l) * double(cfg_.element_count()) * (1.0 - mu2);
    }

    double FocusedArray::sample_noisy_power(double l, const PhaseNoiseModel &noise, RandomStream &rng) const
    {
        check_noise(noise);
        if (noise.sigma_phi == 0.0)
            return power(l);
        return beta(l) * noisy_field_sum(l, noise.sigma_phi, rng).magnitude_squared();
    }

    MonteCarloEstimate FocusedArray::monte_carlo_power(double l, const PhaseNoiseModel &noise, std::size_t trials,
                                                       std::uint64_t seed) const
    {
        if (trials < 2)
            throw std::invalid_argument("monte_carlo_expected_power: trials must be >= 2");
        check_observation_distance(l);
        check_noise(noise);

        std::vector<double> samples(trials);
        parallel_for(trials, [&](std::size_t t)
                     {
            auto rng = RandomStream::substream(seed, t);
            samples[t] = sample_noisy_power(l, noise, rng); });

        const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
        if (*lo == *hi)
            return {*lo, 0.0, trials};

        CompensatedSum sum;
        for (double v : samples)
            sum.add(v);
        const double mean = sum.value() / double(trials);
        CompensatedSum sq;
        for (double v : samples)
            sq.add((v - mean) * (v - mean));
        const double var = sq.value() / double(trials - 1);
        return {mean, std::sqrt(var / double(trials)), trials};
    }

    double FocusedArray::deviated_power(double l, const DeviationModel &dev) const
    {
        return beta(l) * deviated_field_sum(l, dev).magnitude_squared();
    }

    double FocusedArray::deviated_taylor_power(double l, const DeviationModel &dev) const
    {
        return beta(l) * deviated_taylor_field_sum(l, dev).magnitude_squared();
    }

    double FocusedArray::focal_deviated_power(const DeviationModel &dev) const
    {
        const double n = double(cfg_.element_count());
        return power(sc_.focal_distance) / (n * n) * focal_deviation_sum(dev).magnitude_squared();
    }

    PhaseMatrix precoding_phases(const ArrayConfig &cfg, const FocusScenario &sc)
    {
        check_scenario(sc);
        const double k = cfg.wavenumber();
        const double L = sc.focal_distance;
        std::vector<double> phases;
        phases.reserve(cfg.element_count());
        for (const auto &p : element_coordinates(cfg))
            phases.push_back(-k * std::sqrt(p.x * p.x + p.y * p.y + L * L));
        return PhaseMatrix(cfg.side_count(), std::move(phases));
    }

    std::complex<double> channel_coefficient(const ArrayConfig &cfg, ElementIndex idx, double l)
    {
        const double d = element_distance(cfg, idx, l);
        const double amp = cfg.wavelength() / (4.0 * pi * l);
        return -amp * std::polar(1.0, cfg.wavenumber() * d);
    }

    double received_power(const ArrayConfig &cfg, const FocusScenario &sc, double l)
    {
        return FocusedArray(cfg, sc).power(l);
    }

    double coherence_factor(const PhaseNoiseModel &noise)
    {
        check_noise(noise);
        return std::exp(-0.5 * noise.sigma_phi * noise.sigma_phi);
    }

    double expected_power_noisy(const ArrayConfig &cfg, const FocusScenario &sc, double l,
                                const PhaseNoiseModel &noise)
    {
        return FocusedArray(cfg, sc).expected_noisy_power(l, noise);
    }

    double sample_power_noisy(const ArrayConfig &cfg, const FocusScenario &sc, double l,
                              const PhaseNoiseModel &noise, RandomStream &rng)
    {
        return FocusedArray(cfg, sc).sample_noisy_power(l, noise, rng);
    }

    MonteCarloEstimate monte_carlo_expected_power(const ArrayConfig &cfg, const FocusScenario &sc, double l,
                                                  const PhaseNoiseModel &noise, std::size_t trials,
                                                  std::uint64_t seed)
    {
        return FocusedArray(cfg, sc).monte_carlo_power(l, noise, trials, seed);
    }

    double received_power_deviated(const ArrayConfig &cfg, const FocusScenario &sc, double l,
                                   const DeviationModel &dev)
    {
        return FocusedArray(cfg, sc).deviated_power(l, dev);
    }

    double received_power_deviated_taylor(const ArrayConfig &cfg, const FocusScenario &sc, double l,
                                          const DeviationModel &dev)
    {
        return FocusedArray(cfg, sc).deviated_taylor_power(l, dev);
    }

    double focal_power_deviated(const ArrayConfig &cfg, const FocusScenario &sc, const DeviationModel &dev)
    {
        return FocusedArray(cfg, sc).focal_deviated_power(dev);
    }
}
