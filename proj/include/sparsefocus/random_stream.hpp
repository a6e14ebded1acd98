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

#ifndef SPARSEFOCUS_RANDOM_STREAM_HPP
#define SPARSEFOCUS_RANDOM_STREAM_HPP

#include <cstdint>
#include <cmath>
#include <random>

namespace sparsefocus
{
    // SplitMix64 finalizer; used to derive independent substream seeds
    inline std::uint64_t mix64(std::uint64_t z)
    {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Seeded stream of uniforms and standard normals. std::mt19937_64 is fully
    // specified by the standard and the normal transform is done here, so draws
    // are reproducible across platforms and standard libraries.
    class RandomStream
    {
    public:
        explicit RandomStream(std::uint64_t seed) : engine_(mix64(seed)) {}

        // Substream keyed by (seed, key); independent of evaluation order
        static RandomStream substream(std::uint64_t seed, std::uint64_t key)
        {
            return RandomStream(mix64(seed) ^ mix64(key + 0x632be59bd9b4e019ULL));
        }

        // Uniform on (0, 1), 53-bit resolution
        double uniform()
        {
            return (double(engine_() >> 11) + 0.5) * 0x1.0p-53;
        }

        // Box-Muller; the second variate of each pair is cached
        double normal()
        {
            if (has_spare_)
            {
                has_spare_ = false;
                return spare_;
            }
            const double u1 = uniform(), u2 = uniform();
            const double r = std::sqrt(-2.0 * std::log(u1));
            const double a = 2.0 * 3.14159265358979323846 * u2;
            spare_ = r * std::sin(a);
            has_spare_ = true;
            return r * std::cos(a);
        }

        double normal(double sigma) { return sigma * normal(); }

    private:
        std::mt19937_64 engine_;
        double spare_ = 0.0;
        bool has_spare_ = false;
    };
}

#endif
