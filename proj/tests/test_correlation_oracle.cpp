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


#include "arched/correlation_oracle.hpp"
#include "arched/spectrum.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace arched;

TEST(Oracle, DiagonalIsOne)
{
    const ArchedUlaGeometry g(8, 4.0, pi / 4, 1.0);
    const OracleEstimate e = oracle_entry_ula(g, 3, 3);
    EXPECT_NEAR(e.value.real(), 1.0, 1e-12);
    EXPECT_NEAR(e.value.imag(), 0.0, 1e-14);
    const ArchedUraGeometry u(3, 3, 0.5, 1.0, pi / 3, 1.0);
    EXPECT_NEAR(std::abs(oracle_entry_ura(u, {1, 2}, {1, 2}).value - Complex{1.0, 0.0}), 0.0, 1e-12);
}

TEST(Oracle, UlaMatchesRichardsonMidpoint)
{
    const ArchedUlaGeometry g(8, 4.0, pi / 6, 1.0);
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{0, 1}, {2, 7}, {6, 1}})
    {
        const auto [b, c] = ula_pair_phase(g, m, n);
        auto f = [b, c](double t, double p)
        {
            const double delta = b * (std::sin(t) * std::sin(p) * std::sin(c) - std::cos(t) * std::cos(c));
            return std::complex<double>(std::cos(delta), std::sin(delta)) * (std::sin(t) / (2.0 * pi));
        };
        const Complex ref = ref::midpoint_richardson_2d(f, 200);
        EXPECT_LT(std::abs(oracle_entry_ula(g, m, n).value - ref), 1e-7) << m << "," << n;
    }
}

TEST(Oracle, UraMatchesRichardsonMidpoint)
{
    const ArchedUraGeometry g(4, 4, 2.0 / 3.0, 2.0, pi / 2, 1.0);
    const double k = 2.0 * pi;
    for (auto [p, q] : {std::pair<UraIndex, UraIndex>{{0, 0}, {3, 3}}, {{1, 2}, {2, 0}}, {{3, 1}, {3, 2}}})
    {
        auto f = [&](double t, double ph)
        {
            const auto [a, b, c] = ura_abc(g, p, q, t);
            const double arg = -k * (a * std::cos(ph) + b * std::sin(ph) + c);
            return std::complex<double>(std::cos(arg), std::sin(arg)) * (std::sin(t) / (2.0 * pi));
        };
        const Complex ref = ref::midpoint_richardson_2d(f, 200);
        EXPECT_LT(std::abs(oracle_entry_ura(g, p, q).value - ref), 1e-7);
    }
}

TEST(Oracle, RealPartIsClosedForm)
{
    for (double beta : {1e-6, pi / 6, pi / 2})
    {
        const ArchedUlaGeometry g(8, 4.0, beta, 1.0);
        for (std::size_t n = 0; n < 8; ++n)
            EXPECT_NEAR(oracle_entry_ula(g, 0, n).value.real(), corr_ula_entry(g, 0, n), 1e-10);
    }
    const ArchedUraGeometry u(4, 4, 2.0 / 3.0, 2.0, pi / 3, 1.0);
    EXPECT_NEAR(oracle_entry_ura(u, {0, 1}, {2, 3}).value.real(), corr_ura_entry(u, {0, 1}, {2, 3}), 1e-10);
}

TEST(Oracle, SingleArcUraIsUlaWithSwappedIndices)
{
    const ArchedUlaGeometry ula(6, 2.5, 0.9, 1.0);
    const ArchedUraGeometry ura(2, 6, 0.4, 2.5, 0.9, 1.0);
    for (std::size_t n = 0; n < 6; ++n)
        for (std::size_t n2 = 0; n2 < 6; ++n2)
            EXPECT_LT(std::abs(oracle_entry_ura(ura, {1, n}, {1, n2}).value - oracle_entry_ula(ula, n2, n).value), 1e-12);
}

TEST(Oracle, HermitianPsdMatrix)
{
    const ArchedUlaGeometry g(6, 2.0, pi / 3, 1.0);
    const ComplexCorrelation r = oracle_ula_matrix(g, {}, 2);
    EXPECT_EQ(r.kind(), CorrelationKind::oracle);
    EXPECT_LT(r.hermitian_defect(), 1e-14);
    const EigenSpectrum s = eigen_spectrum(r);
    EXPECT_NO_THROW(check_psd(s));
    EXPECT_NEAR(s.sum(), 6.0, 1e-9);
}

TEST(Oracle, ReportsNonConvergence)
{
    const ArchedUlaGeometry g(4, 40.0, pi / 4, 1.0);
    OracleSettings s;
    s.order = 4;
    s.max_doublings = 1;
    try
    {
        oracle_entry_ula(g, 0, 3, s);
        FAIL() << "expected NumericError";
    }
    catch (const NumericError &e)
    {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("no convergence"), std::string::npos);
        EXPECT_NE(msg.find("last estimates"), std::string::npos);
    }
}

TEST(OracleSettings, Validation)
{
    OracleSettings s;
    EXPECT_NO_THROW(s.check());
    s.order = 0;
    EXPECT_THROW(s.check(), DomainError);
    s.order = 1024;
    s.max_doublings = 3;
    EXPECT_THROW(s.check(), DomainError);
    s = {};
    s.tolerance = 1e-16;
    EXPECT_THROW(s.check(), DomainError);
}

TEST(OddSeries, MatchesImaginaryPart)
{
    for (double beta : {1e-6, pi / 4, pi / 2})
    {
        const ArchedUlaGeometry g(8, 4.0, beta, 1.0);
        for (auto [m, n] : {std::pair<std::size_t, std::size_t>{0, 7}, {2, 5}, {6, 3}})
        {
            const OddSeriesResult odd = odd_term_series_ula(g, m, n, 61);
            EXPECT_NEAR(odd.value, oracle_entry_ula(g, m, n).value.imag(), 1e-8);
            EXPECT_EQ(odd.terms.size(), 31u);
            EXPECT_TRUE(odd.converged);
        }
    }
}

TEST(OddSeries, TermsDecayPastArgument)
{
    const ArchedUlaGeometry g(8, 4.0, pi / 2, 1.0);
    const auto [b, c] = ula_pair_phase(g, 0, 7);
    const OddSeriesResult r = odd_term_series_ula(g, 0, 7, 61);
    const double bound = std::fabs(b);
    for (std::size_t t = 1; t < r.terms.size(); ++t)
    {
        const double k = 2.0 * t + 1;
        if (k > bound + 10)
        {
            EXPECT_LT(std::fabs(r.terms[t]), 1e-10) << "k=" << k;
        }
    }
    const OddSeriesResult longer = odd_term_series_ula(g, 0, 7, 121);
    EXPECT_LT(std::fabs(longer.value - r.value), 1e-9);
}

TEST(OddSeries, AntisymmetricAndDomain)
{
    const ArchedUlaGeometry g(8, 4.0, pi / 6, 1.0);
    EXPECT_NEAR(odd_term_series_ula(g, 1, 6, 31).value, -odd_term_series_ula(g, 6, 1, 31).value, 1e-14);
    EXPECT_EQ(odd_term_series_ula(g, 2, 2, 31).value, 0.0);
    EXPECT_THROW(odd_term_series_ula(g, 0, 1, 60), DomainError);
    EXPECT_THROW(odd_term_series_ula(g, 0, 1, 201), DomainError);
    EXPECT_THROW(odd_term_series_ula(g, 0, 8, 61), DomainError);
}

TEST(Validate, MillimetreWaveUlaSampledPairs)
{
    const ArchedUlaGeometry g(512, 0.3142, pi / 2, 0.003);
    const ValidationReport rep = validate(g, 10, {}, 42);
    EXPECT_FALSE(rep.exhaustive);
    EXPECT_EQ(rep.pairs.size(), 10u);
    EXPECT_LT(rep.max_abs_real_error, 1e-6);
    EXPECT_EQ(rep.array_type, "ula");
}

TEST(Validate, PairSelection)
{
    bool exhaustive = false;
    EXPECT_EQ(select_pairs(16, 10, 0, exhaustive).size(), 136u);
    EXPECT_TRUE(exhaustive);
    const auto a = select_pairs(64, 10, 7, exhaustive);
    EXPECT_FALSE(exhaustive);
    EXPECT_EQ(a, select_pairs(64, 10, 7, exhaustive));
    EXPECT_NE(a, select_pairs(64, 10, 8, exhaustive));
    for (auto [i, j] : a)
        EXPECT_LE(i, j);
    EXPECT_THROW(select_pairs(64, 0, 7, exhaustive), DomainError);
}

TEST(Validate, ThreadCountDoesNotChangeResults)
{
    const ArchedUraGeometry g(3, 3, 0.5, 1.5, pi / 3, 1.0);
    const ValidationReport a = validate(g, 5, {}, 1, 1), b = validate(g, 5, {}, 1, 3);
    ASSERT_EQ(a.pairs.size(), b.pairs.size());
    for (std::size_t k = 0; k < a.pairs.size(); ++k)
    {
        EXPECT_EQ(a.pairs[k].oracle_re, b.pairs[k].oracle_re);
        EXPECT_EQ(a.pairs[k].oracle_im, b.pairs[k].oracle_im);
    }
    EXPECT_EQ(a.shape, (std::vector<std::size_t>{3, 3}));
    EXPECT_LT(a.max_abs_real_error, 1e-10);
}
