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

#ifndef SPARSEFOCUS_COMPENSATED_SUM_HPP
#define SPARSEFOCUS_COMPENSATED_SUM_HPP

#include <cmath>
#include <complex>

namespace sparsefocus
{
    // Neumaier (improved Kahan) summation, applied independently to the real
    // and imaginary parts. Results depend only on the order of add() calls.
    class CompensatedSum
    {
    public:
        void add(double v)
        {
            const double t = sum_ + v;
            if (std::abs(sum_) >= std::abs(v))
                comp_ += (sum_ - t) + v;
            else
                comp_ += (v - t) + sum_;
            sum_ = t;
        }

        double value() const { return sum_ + comp_; }

    private:
        double sum_ = 0.0;
        double comp_ = 0.0;
    };

    class CompensatedComplexSum
    {
    public:
        void add(std::complex<double> v)
        {
            re_.add(v.real());
            im_.add(v.imag());
        }

        void add_polar(double phase)
        {
            re_.add(std::cos(phase));
            im_.add(std::sin(phase));
        }

        std::complex<double> value() const { return {re_.value(), im_.value()}; }

    private:
        CompensatedSum re_;
        CompensatedSum im_;
    };
}

#endif
