// SPDX-License-Identifier: Apache-2.0
//
// arched: spatial correlation and degrees of freedom of arched antenna arrays
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

// Test-only reference computations. Nothing here calls into the library's
// numerics, so the checks built on them stay independent of the code under test.

#ifndef ARCHED_TESTS_ORACLES_HPP
#define ARCHED_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <random>

namespace arched::ref
{
    inline constexpr double pi = std::numbers::pi;

    // Plain ascending series in long double with factorials built term by term
    inline long double naive_bessel_j(int k, long double x)
    {
        long double fact_k = 1.0L;
        for (int i = 2; i <= k; ++i)
            fact_k *= i;
        long double term = std::pow(x / 2.0L, static_cast<long double>(k)) / fact_k;
        long double sum = term;
        for (int m = 1; m < 300; ++m)
        {
            term *= -(x * x / 4.0L) / (static_cast<long double>(m) * static_cast<long double>(m + k));
            sum += term;
        }
        return sum;
    }

    inline double bisect(const std::function<double(double)> &f, double lo, double hi, int iterations = 200)
    {
        double flo = f(lo);
        for (int i = 0; i < iterations; ++i)
        {
            const double mid = 0.5 * (lo + hi);
            const double fm = f(mid);
            if ((fm < 0) == (flo < 0))
            {
                lo = mid;
                flo = fm;
            }
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    }

    // Midpoint rule on an n x n grid over [0, pi]^2
    inline std::complex<double> midpoint_2d(const std::function<std::complex<double>(double, double)> &f, std::size_t n)
    {
        const double h = pi / static_cast<double>(n);
        std::complex<double> total = 0.0;
        for (std::size_t i = 0; i < n; ++i)
        {
            const double t = (static_cast<double>(i) + 0.5) * h;
            std::complex<double> row = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                row += f(t, (static_cast<double>(j) + 0.5) * h);
            total += row;
        }
        return total * h * h;
    }

    // Richardson-extrapolated midpoint rule, O(h^4)
    inline std::complex<double> midpoint_richardson_2d(const std::function<std::complex<double>(double, double)> &f,
                                                       std::size_t n)
    {
        const auto coarse = midpoint_2d(f, n);
        const auto fine = midpoint_2d(f, 2 * n);
        return (4.0 * fine - coarse) / 3.0;
    }

    // Element position straight from the arc formula (no cancellation-free rewrites)
    struct NaivePoint
    {
        double x, y, z;
    };

    inline NaivePoint naive_arc_position(std::size_t n, std::size_t count, double length, double beta)
    {
        const double r = length / (2.0 * beta);
        const double alpha = static_cast<double>(n) * length / (static_cast<double>(count - 1) * r);
        return {0.0, r * std::cos(beta - alpha) - r * std::cos(beta), r * std::sin(beta - alpha)};
    }

    // Fixed-seed generator for property checks
    struct Sampler
    {
        std::mt19937_64 rng;
        explicit Sampler(std::uint64_t seed) : rng(seed) {}
        double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
        std::size_t index(std::size_t n) { return static_cast<std::size_t>(rng() % n); }
    };
}

#endif
