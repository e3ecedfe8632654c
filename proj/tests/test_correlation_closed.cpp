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


#include "arched/correlation_closed.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace arched;

TEST(CorrUla, DiagonalAndPlanarHalfWavelength)
{
    const ArchedUlaGeometry g(16, 7.5, 0.0, 1.0); // d = lambda / 2
    const RealCorrelation r = corr_ula_matrix(g);
    for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = 0; j < 16; ++j)
        {
            if (i == j)
                EXPECT_EQ(r(i, j), 1.0);
            else
                EXPECT_LT(std::fabs(r(i, j)), 1e-12);
        }
    EXPECT_EQ(r.kind(), CorrelationKind::closed_ula);
}

TEST(CorrUla, ToeplitzSymmetricBounded)
{
    ref::Sampler s(21);
    for (int t = 0; t < 20; ++t)
    {
        const ArchedUlaGeometry g(2 + s.index(40), s.uniform(0.5, 8.0), s.uniform(0.0, pi / 2), s.uniform(0.1, 1.0));
        const RealCorrelation r = corr_ula_matrix(g, 3);
        EXPECT_EQ(r.hermitian_defect(), 0.0);
        EXPECT_EQ(r.trace(), static_cast<double>(g.size()));
        for (std::size_t i = 0; i + 1 < g.size(); ++i)
            for (std::size_t j = 0; j + 1 < g.size(); ++j)
            {
                EXPECT_EQ(r(i, j), r(i + 1, j + 1));
                EXPECT_LE(std::fabs(r(i, j)), 1.0);
            }
        const std::size_t m = s.index(g.size()), n = s.index(g.size());
        EXPECT_EQ(r(m, n), corr_ula_entry(g, m, n));
    }
}

TEST(CorrUla, ChordForm)
{
    const ArchedUlaGeometry g(8, 4.0, pi / 4, 1.0);
    const double r = *g.radius();
    for (std::size_t dn = 0; dn < 8; ++dn)
    {
        const double chord = 2.0 * r * std::sin(dn * (pi / 4) / 7.0);
        const double x = 2.0 * chord;
        const double expected = dn == 0 ? 1.0 : std::sin(pi * x) / (pi * x);
        EXPECT_NEAR(corr_ula_entry(g, 0, dn), expected, 1e-14);
    }
    EXPECT_THROW(corr_ula_entry(g, 0, 8), DomainError);
}

TEST(CorrUra, BlockToeplitzAndSymmetric)
{
    const ArchedUraGeometry g(4, 5, 0.3, 2.0, pi / 3, 0.9);
    const RealCorrelation r = corr_ura_matrix(g, 2);
    EXPECT_EQ(r.dim(), 20u);
    EXPECT_EQ(r.hermitian_defect(), 0.0);
    EXPECT_EQ(r.trace(), 20.0);
    for (std::size_t i = 0; i < 20; ++i)
        for (std::size_t j = 0; j < 20; ++j)
        {
            const UraIndex p = g.unflat(i), q = g.unflat(j);
            EXPECT_EQ(r(i, j), corr_ura_entry(g, p, q));
            if (p.row + 1 < 4 && q.row + 1 < 4)
            {
                EXPECT_EQ(r(i, j), r(g.flat({p.row + 1, p.col}), g.flat({q.row + 1, q.col})));
            }
        }
}

TEST(CorrUra, SingleRowIsUla)
{
    for (double beta : {0.0, 1e-6, 0.7, pi / 2})
    {
        const ArchedUlaGeometry ula(11, 3.0, beta, 0.8);
        const ArchedUraGeometry ura(1, 11, 0.5, 3.0, beta, 0.8);
        const RealCorrelation a = corr_ula_matrix(ula), b = corr_ura_matrix(ura);
        for (std::size_t i = 0; i < 11; ++i)
            for (std::size_t j = 0; j < 11; ++j)
                EXPECT_EQ(a(i, j), b(i, j));
    }
}

TEST(CorrUra, DistanceAndCoefficientFormsAgree)
{
    ref::Sampler s(23);
    for (int t = 0; t < 200; ++t)
    {
        const ArchedUraGeometry g(1 + s.index(6), 2 + s.index(8), s.uniform(0.05, 1.0), s.uniform(0.5, 4.0),
                                  s.uniform(0.0, pi / 2), s.uniform(0.3, 1.0));
        const UraIndex p{s.index(g.rows()), s.index(g.per_arc())}, q{s.index(g.rows()), s.index(g.per_arc())};
        EXPECT_NEAR(corr_ura_entry(g, p, q), corr_ura_entry_de(g, p, q), 1e-13);
    }
}

TEST(CorrUra, NearPlanarLimit)
{
    const double lambda = 1.0, length = 2.0, dx = length / 3.0;
    const ArchedUraGeometry g(4, 4, dx, length, 1e-6, lambda);
    const double d = length / 3.0;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
        {
            const UraIndex p = g.unflat(i), q = g.unflat(j);
            const double ex = dx * index_gap(p.row, q.row), ey = d * index_gap(p.col, q.col);
            const double x = 2.0 * std::hypot(ex, ey) / lambda;
            const double planar = x == 0.0 ? 1.0 : std::sin(pi * x) / (pi * x);
            const double tol = p.row == q.row ? 1e-12 : 1e-11;
            EXPECT_NEAR(corr_ura_entry(g, p, q), planar, tol);
        }
}

TEST(CorrUra, ResourceGuard)
{
    const ArchedUraGeometry big(129, 128, 0.001, 0.05, 0.3, 0.003);
    EXPECT_THROW(corr_ura_matrix(big), ResourceError);
    EXPECT_THROW(corr_ura_entry(big, {129, 0}, {0, 0}), DomainError);
}
