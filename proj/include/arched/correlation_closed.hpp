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

#ifndef ARCHED_CORRELATION_CLOSED_HPP
#define ARCHED_CORRELATION_CLOSED_HPP

#include "arched/errors.hpp"
#include "arched/geometry.hpp"
#include "arched/numerics.hpp"
#include "arched/parallel.hpp"
#include "arched/wavefield.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <type_traits>
#include <vector>

// Closed-form spatial correlation under half-space isotropic scattering.
//
// Both array types reduce to the normalised sinc of twice the element
// distance in wavelengths:
//     ULA: sinc(2 * 2R |sin((alpha_n - alpha_m) / 2)| / lambda)
//     URA: sinc(2 * sqrt((m - m')^2 d_x^2 + 4 R^2 sin^2((psi_n - psi_n') / 2)) / lambda)
// The URA value with m = m' is computed through the same chord as the ULA,
// so a single-row URA reproduces the ULA matrix bit for bit.

namespace arched
{
    enum class CorrelationKind
    {
        closed_ula,
        closed_ura,
        oracle
    };

    inline std::string to_string(CorrelationKind k)
    {
        switch (k)
        {
        case CorrelationKind::closed_ula: return "closed_ula";
        case CorrelationKind::closed_ura: return "closed_ura";
        case CorrelationKind::oracle: return "oracle";
        }
        return "unknown";
    }

    // Dense square correlation matrix, row-major
    template <typename T>
    class CorrelationMatrix
    {
    public:
        using value_type = T;

        CorrelationMatrix(std::size_t dim, CorrelationKind kind) : dim_(dim), kind_(kind), data_(dim * dim, T{}) {}

        std::size_t dim() const { return dim_; }
        CorrelationKind kind() const { return kind_; }

        T &operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
        const T &operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

        const std::vector<T> &data() const { return data_; }
        std::vector<T> &data() { return data_; }

        // max |R(i,j) - conj(R(j,i))|
        double hermitian_defect() const
        {
            double worst = 0.0;
            for (std::size_t i = 0; i < dim_; ++i)
                for (std::size_t j = i; j < dim_; ++j)
                {
                    double d;
                    if constexpr (std::is_same_v<T, Complex>)
                        d = std::abs((*this)(i, j) - std::conj((*this)(j, i)));
                    else
                        d = std::fabs((*this)(i, j) - (*this)(j, i));
                    worst = std::max(worst, d);
                }
            return worst;
        }

        T trace() const
        {
            T t{};
            for (std::size_t i = 0; i < dim_; ++i)
                t += (*this)(i, i);
            return t;
        }

    private:
        std::size_t dim_;
        CorrelationKind kind_;
        std::vector<T> data_;
    };

    using RealCorrelation = CorrelationMatrix<double>;
    using ComplexCorrelation = CorrelationMatrix<Complex>;

    // Largest URA handled by corr_ura_matrix
    inline constexpr std::size_t max_matrix_elements = 16384;

    // sinc of (2 / lambda) times an element distance
    inline double distance_correlation(double dist, double wavelength)
    {
        return sinc_normalized(2.0 * dist / wavelength);
    }

    inline std::size_t index_gap(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

    inline double corr_ula_entry(const ArchedUlaGeometry &g, std::size_t m, std::size_t n)
    {
        if (m >= g.size() || n >= g.size())
            throw DomainError("corr_ula_entry: index out of range");
        return distance_correlation(g.arc().chord(index_gap(m, n)), g.wavelength());
    }

    // Element distance between URA elements p and q (Euclidean form of the URA closed form)
    inline double ura_pair_distance(const ArchedUraGeometry &g, UraIndex p, UraIndex q)
    {
        g.check(p);
        g.check(q);
        const double dx = static_cast<double>(index_gap(p.row, q.row)) * g.row_spacing();
        const double chord = g.arc().chord(index_gap(p.col, q.col));
        return std::sqrt(dx * dx + chord * chord);
    }

    inline double corr_ura_entry(const ArchedUraGeometry &g, UraIndex p, UraIndex q)
    {
        return distance_correlation(ura_pair_distance(g, p, q), g.wavelength());
    }

    // URA closed form evaluated from (D, E) directly; agrees with corr_ura_entry to rounding
    inline double corr_ura_entry_de(const ArchedUraGeometry &g, UraIndex p, UraIndex q)
    {
        const auto [d, e] = ura_de(g, p, q);
        const double rho = std::sqrt(d * d + e * e);
        const double k = 2.0 * pi / g.wavelength();
        if (rho < 1.0e-12 * g.wavelength())
        {
            const double x2 = (k * rho) * (k * rho);
            return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
        }
        return std::sin(k * rho) / (k * rho);
    }

    // Toeplitz N x N matrix; the first row is evaluated once per separation
    inline RealCorrelation corr_ula_matrix(const ArchedUlaGeometry &g, std::size_t threads = 1)
    {
        const std::size_t n = g.size();
        std::vector<double> by_gap(n);
        parallel_for(n, threads, [&](std::size_t k) { by_gap[k] = distance_correlation(g.arc().chord(k), g.wavelength()); });

        RealCorrelation r(n, CorrelationKind::closed_ula);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                r(i, j) = by_gap[index_gap(i, j)];
        return r;
    }

    // (M N) x (M N) matrix in row-major element order. Entries depend only on
    // (|m - m'|, |n - n'|), so those M x N distinct values are evaluated once.
    inline RealCorrelation corr_ura_matrix(const ArchedUraGeometry &g, std::size_t threads = 1)
    {
        if (g.size() > max_matrix_elements)
            throw ResourceError("corr_ura_matrix: " + std::to_string(g.size()) + " elements exceeds the limit of " +
                                std::to_string(max_matrix_elements));
        const std::size_t rows = g.rows(), cols = g.per_arc(), dim = g.size();

        std::vector<double> table(rows * cols);
        parallel_for(rows, threads, [&](std::size_t dm)
        {
            for (std::size_t dn = 0; dn < cols; ++dn)
                table[dm * cols + dn] = corr_ura_entry(g, {dm, dn}, {0, 0});
        });

        RealCorrelation r(dim, CorrelationKind::closed_ura);
        parallel_for(dim, threads, [&](std::size_t i)
        {
            const UraIndex p = g.unflat(i);
            for (std::size_t j = 0; j < dim; ++j)
            {
                const UraIndex q = g.unflat(j);
                r(i, j) = table[index_gap(p.row, q.row) * cols + index_gap(p.col, q.col)];
            }
        });
        return r;
    }
}

#endif
