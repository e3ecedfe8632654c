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

#ifndef ARCHED_NUMERICS_HPP
#define ARCHED_NUMERICS_HPP

#include "arched/errors.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace arched
{
    using Complex = std::complex<double>;

    inline constexpr double pi = std::numbers::pi;

    // Closed interval [lo, hi] used as an integration range
    struct Interval
    {
        double lo = 0.0;
        double hi = 0.0;
        double width() const { return hi - lo; }
    };

    // Gauss-Legendre rule on [-1, 1]; nodes ascending, weights positive
    struct QuadratureRule
    {
        std::vector<double> nodes;
        std::vector<double> weights;

        std::size_t order() const { return nodes.size(); }
    };

    namespace detail
    {
        inline constexpr int bessel_max_order = 200;
        inline constexpr double bessel_max_argument = 1.0e6;
        inline constexpr double bessel_series_limit = 12.0;

        // Ascending power series, accumulated in extended precision to absorb
        // the cancellation near the switch point (terms reach ~I_k(12)).
        inline double bessel_j_series(int k, double x)
        {
            const long double half = 0.5L * static_cast<long double>(x);
            const long double q = half * half;
            long double term = std::exp(static_cast<long double>(k) * std::log(half) - std::lgamma(static_cast<long double>(k) + 1.0L));
            long double sum = term;
            for (int m = 1; m < 400; ++m)
            {
                term *= -q / (static_cast<long double>(m) * static_cast<long double>(m + k));
                sum += term;
                if (std::fabs(term) <= 1.0e-21L * std::fabs(sum) || term == 0.0L)
                    break;
            }
            return static_cast<double>(sum);
        }

        // Miller backward recurrence normalised with J_0 + 2 sum_{j>=1} J_{2j} = 1.
        inline double bessel_j_miller(int k, double x)
        {
            const double anchor = std::max(static_cast<double>(k), x);
            int start = static_cast<int>(std::ceil(anchor + 30.0 + 10.0 * std::cbrt(anchor)));
            if (start % 2 != 0)
                ++start;

            constexpr double big = 1.0e250;
            const double two_over_x = 2.0 / x;
            double next = 0.0; // J_{j+1}
            double curr = 1.0e-300; // J_j
            double norm = 0.0;
            double target = 0.0;
            for (int j = start; j > 0; --j)
            {
                const double prev = static_cast<double>(j) * two_over_x * curr - next; // J_{j-1}
                next = curr;
                curr = prev;
                if (std::fabs(curr) > big)
                {
                    curr /= big;
                    next /= big;
                    norm /= big;
                    target /= big;
                }
                if (j == k + 1)
                    target = curr;
                if ((j - 1) % 2 == 0 && j - 1 > 0)
                    norm += curr;
            }
            norm = 2.0 * norm + curr;
            if (k == 0)
                target = curr;
            return target / norm;
        }
    }

    // Bessel function of the first kind, integer order 0..200, |x| <= 1e6.
    // Series below |x| = 12, Miller backward recurrence above.
    inline double bessel_j(int k, double x)
    {
        if (k < 0 || k > detail::bessel_max_order)
            throw DomainError("bessel_j: order " + std::to_string(k) + " outside [0, 200]");
        if (!std::isfinite(x) || std::fabs(x) > detail::bessel_max_argument)
            throw DomainError("bessel_j: argument outside [-1e6, 1e6]");

        if (x < 0.0)
        {
            const double v = bessel_j(k, -x);
            return (k % 2 == 0) ? v : -v;
        }
        if (x == 0.0)
            return (k == 0) ? 1.0 : 0.0;
        if (x < detail::bessel_series_limit)
            return detail::bessel_j_series(k, x);
        return detail::bessel_j_miller(k, x);
    }

    // Normalised sinc, sin(pi x) / (pi x)
    inline double sinc_normalized(double x)
    {
        const double px = pi * x;
        if (std::fabs(x) < 1.0e-6)
        {
            const double p2 = px * px;
            return 1.0 - p2 / 6.0 + p2 * p2 / 120.0;
        }
        return std::sin(px) / px;
    }

    // Gauss-Legendre nodes and weights via Newton iteration on the three-term
    // Legendre recurrence. Symmetric pairs are computed once and mirrored.
    inline QuadratureRule gauss_legendre(std::size_t order)
    {
        if (order < 1 || order > 4096)
            throw DomainError("gauss_legendre: order " + std::to_string(order) + " outside [1, 4096]");

        const std::size_t n = order;
        const double nd = static_cast<double>(n);
        QuadratureRule rule;
        rule.nodes.assign(n, 0.0);
        rule.weights.assign(n, 0.0);

        // Returns P_n(z) and P_n'(z)
        auto legendre = [n, nd](double z)
        {
            double p1 = 1.0, p2 = 0.0;
            for (std::size_t j = 1; j <= n; ++j)
            {
                const double p3 = p2;
                p2 = p1;
                const double jd = static_cast<double>(j);
                p1 = ((2.0 * jd - 1.0) * z * p2 - (jd - 1.0) * p3) / jd;
            }
            const double dp = nd * (z * p1 - p2) / (z * z - 1.0);
            return std::pair{p1, dp};
        };

        const std::size_t half = (n + 1) / 2;
        for (std::size_t i = 0; i < half; ++i)
        {
            double z = std::cos(pi * (static_cast<double>(i) + 0.75) / (nd + 0.5));
            if (n % 2 == 1 && i == half - 1)
                z = 0.0;
            else
            {
                for (int it = 0; it < 100; ++it)
                {
                    const auto [p, dp] = legendre(z);
                    const double step = p / dp;
                    z -= step;
                    if (std::fabs(step) < 1.0e-16)
                        break;
                }
            }
            const double dp = legendre(z).second;
            const double w = 2.0 / ((1.0 - z * z) * dp * dp);
            rule.nodes[i] = -z;
            rule.nodes[n - 1 - i] = z;
            rule.weights[i] = w;
            rule.weights[n - 1 - i] = w;
        }
        return rule;
    }

    // Tensor-product Gauss-Legendre estimate of the integral of f(theta, phi)
    // over theta_range x phi_range. Summation order is fixed: theta outer, phi inner.
    template <typename F>
    Complex integrate_2d(F &&f, Interval theta_range, Interval phi_range, const QuadratureRule &rule)
    {
        const std::size_t n = rule.order();
        const double t_half = 0.5 * theta_range.width(), t_mid = 0.5 * (theta_range.hi + theta_range.lo);
        const double p_half = 0.5 * phi_range.width(), p_mid = 0.5 * (phi_range.hi + phi_range.lo);

        std::vector<double> phis(n);
        for (std::size_t j = 0; j < n; ++j)
            phis[j] = p_mid + p_half * rule.nodes[j];

        Complex total{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i)
        {
            const double theta = t_mid + t_half * rule.nodes[i];
            Complex inner{0.0, 0.0};
            for (std::size_t j = 0; j < n; ++j)
            {
                const Complex v = f(theta, phis[j]);
                if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                {
                    std::ostringstream msg;
                    msg.precision(17);
                    msg << "integrate_2d: non-finite integrand at theta=" << theta << ", phi=" << phis[j];
                    throw NumericError(msg.str());
                }
                inner += rule.weights[j] * v;
            }
            total += rule.weights[i] * inner;
        }
        return total * (t_half * p_half);
    }

    // One-dimensional counterpart of integrate_2d for real integrands
    template <typename F>
    double integrate_1d(F &&f, Interval range, const QuadratureRule &rule)
    {
        const double half = 0.5 * range.width(), mid = 0.5 * (range.hi + range.lo);
        double total = 0.0;
        for (std::size_t i = 0; i < rule.order(); ++i)
        {
            const double x = mid + half * rule.nodes[i];
            const double v = f(x);
            if (!std::isfinite(v))
            {
                std::ostringstream msg;
                msg.precision(17);
                msg << "integrate_1d: non-finite integrand at x=" << x;
                throw NumericError(msg.str());
            }
            total += rule.weights[i] * v;
        }
        return total * half;
    }
}

#endif
