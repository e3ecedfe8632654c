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

#ifndef ARCHED_CORRELATION_ORACLE_HPP
#define ARCHED_CORRELATION_ORACLE_HPP

#include "arched/correlation_closed.hpp"
#include "arched/errors.hpp"
#include "arched/geometry.hpp"
#include "arched/numerics.hpp"
#include "arched/parallel.hpp"
#include "arched/wavefield.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

// Brute-force evaluation of the half-space correlation integral
//     R = int_0^pi int_0^pi sin(theta) / (2 pi) exp(j phase(theta, phi)) dphi dtheta
// by tensor Gauss-Legendre quadrature with order doubling. Nothing here uses
// the closed forms except validate(), which compares the two.
//
// Sign convention: ULA entries use exp(+j Delta_{m,n}) with
// Delta_{m,n} = phase_delta_ula(m, n); URA entries use
// exp(-j k (A cos(phi) + B sin(phi) + C)) with (A, B, C) = ura_abc(p, q).

namespace arched
{
    struct OracleSettings
    {
        std::size_t order = 256;
        double tolerance = 1.0e-10;
        std::size_t max_doublings = 3;

        void check() const
        {
            if (order < 1 || order > 4096)
                throw DomainError("oracle order outside [1, 4096]");
            if (!(tolerance >= 1.0e-14) || !std::isfinite(tolerance))
                throw DomainError("oracle tolerance must be >= 1e-14");
            if (max_doublings > 12 || (order << max_doublings) > 4096)
                throw DomainError("oracle order ladder exceeds 4096 nodes per axis");
        }
    };

    // Gauss-Legendre rules order, 2 order, ..., order 2^max_doublings, built once
    // and shared read-only between entry evaluations.
    class QuadratureLadder
    {
    public:
        explicit QuadratureLadder(const OracleSettings &s) : settings_(s)
        {
            s.check();
            for (std::size_t k = 0, n = s.order; k <= s.max_doublings; ++k, n *= 2)
                rules_.push_back(gauss_legendre(n));
        }

        const OracleSettings &settings() const { return settings_; }
        const std::vector<QuadratureRule> &rules() const { return rules_; }

    private:
        OracleSettings settings_;
        std::vector<QuadratureRule> rules_;
    };

    struct OracleEstimate
    {
        Complex value;
        std::size_t order = 0; // nodes per axis of the accepted estimate
    };

    inline double scattering_density(const Direction &dir)
    {
        check_direction(dir);
        return std::sin(dir.theta) / (2.0 * pi);
    }

    namespace detail
    {
        inline std::string format_complex(Complex v)
        {
            std::ostringstream s;
            s.precision(17);
            s << v.real() << (v.imag() < 0 ? " - " : " + ") << std::fabs(v.imag()) << "j";
            return s.str();
        }

        // Doubles the order until two successive estimates differ by less than the tolerance
        template <typename Value, typename Eval, typename Diff>
        std::pair<Value, std::size_t> converge_ladder(const QuadratureLadder &ladder, Eval &&eval, Diff &&diff,
                                                      const std::string &what)
        {
            const auto &rules = ladder.rules();
            Value prev = eval(rules.front());
            if (rules.size() == 1)
                return {prev, rules.front().order()};
            for (std::size_t k = 1; k < rules.size(); ++k)
            {
                Value next = eval(rules[k]);
                if (diff(next, prev) < ladder.settings().tolerance)
                    return {next, rules[k].order()};
                prev = std::move(next);
            }
            throw NumericError(what + ": no convergence after " + std::to_string(rules.size() - 1) + " doublings");
        }

        inline OracleEstimate converge_2d(const QuadratureLadder &ladder, const auto &integrand, const std::string &what)
        {
            const Interval half_turn{0.0, pi};
            Complex last{}, before{};
            try
            {
                auto [v, order] = converge_ladder<Complex>(
                    ladder,
                    [&](const QuadratureRule &rule)
                    {
                        before = last;
                        last = integrate_2d(integrand, half_turn, half_turn, rule);
                        return last;
                    },
                    [](Complex a, Complex b) { return std::abs(a - b); }, what);
                return {v, order};
            }
            catch (const NumericError &e)
            {
                throw NumericError(std::string(e.what()) + " (last estimates " + format_complex(before) + ", " +
                                   format_complex(last) + ")");
            }
        }
    }

    inline OracleEstimate oracle_entry_ula(const ArchedUlaGeometry &g, std::size_t m, std::size_t n,
                                           const QuadratureLadder &ladder)
    {
        if (m >= g.size() || n >= g.size())
            throw DomainError("oracle_entry_ula: index out of range");
        const auto [b, c] = ula_pair_phase(g, m, n);
        const double bs = b * std::sin(c), bc = b * std::cos(c);
        // theta is constant along each inner phi sweep of integrate_2d
        double theta_seen = -1.0, st = 0.0, ct = 0.0;
        auto integrand = [&, bs, bc](double theta, double phi)
        {
            if (theta != theta_seen)
            {
                theta_seen = theta;
                st = std::sin(theta);
                ct = std::cos(theta);
            }
            return std::polar(st / (2.0 * pi), bs * st * std::sin(phi) - bc * ct);
        };
        return detail::converge_2d(ladder, integrand,
                                   "oracle_entry_ula(" + std::to_string(m) + ", " + std::to_string(n) + ")");
    }

    inline OracleEstimate oracle_entry_ula(const ArchedUlaGeometry &g, std::size_t m, std::size_t n,
                                           const OracleSettings &s = {})
    {
        return oracle_entry_ula(g, m, n, QuadratureLadder(s));
    }

    inline OracleEstimate oracle_entry_ura(const ArchedUraGeometry &g, UraIndex p, UraIndex q,
                                           const QuadratureLadder &ladder)
    {
        // theta-free parts of (A, B, C)
        const UraPhaseTerms unit_sin = ura_abc(g, p, q, 0.5 * pi);
        const UraPhaseTerms unit_cos = ura_abc(g, p, q, 0.0);
        const double k = 2.0 * pi / g.wavelength();
        const double a0 = k * unit_sin.a, b0 = k * unit_sin.b, c0 = k * unit_cos.c;
        double theta_seen = -1.0, st = 0.0, ct = 0.0;
        auto integrand = [&, a0, b0, c0](double theta, double phi)
        {
            if (theta != theta_seen)
            {
                theta_seen = theta;
                st = std::sin(theta);
                ct = std::cos(theta);
            }
            return std::polar(st / (2.0 * pi), -(a0 * st * std::cos(phi) + b0 * st * std::sin(phi) + c0 * ct));
        };
        return detail::converge_2d(ladder, integrand,
                                   "oracle_entry_ura(" + std::to_string(g.flat(p)) + ", " + std::to_string(g.flat(q)) + ")");
    }

    inline OracleEstimate oracle_entry_ura(const ArchedUraGeometry &g, UraIndex p, UraIndex q, const OracleSettings &s = {})
    {
        return oracle_entry_ura(g, p, q, QuadratureLadder(s));
    }

    // Hermitian oracle matrix; entry (i, j) = oracle_entry(i, j), lower half by conjugation
    inline ComplexCorrelation oracle_ula_matrix(const ArchedUlaGeometry &g, const OracleSettings &s, std::size_t threads = 1)
    {
        const QuadratureLadder ladder(s);
        const std::size_t n = g.size();
        ComplexCorrelation r(n, CorrelationKind::oracle);
        parallel_for(n, threads, [&](std::size_t i)
        {
            for (std::size_t j = i; j < n; ++j)
                r(i, j) = oracle_entry_ula(g, i, j, ladder).value;
        });
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j)
                r(i, j) = std::conj(r(j, i));
        return r;
    }

    inline ComplexCorrelation oracle_ura_matrix(const ArchedUraGeometry &g, const OracleSettings &s, std::size_t threads = 1)
    {
        const QuadratureLadder ladder(s);
        const std::size_t n = g.size();
        ComplexCorrelation r(n, CorrelationKind::oracle);
        parallel_for(n, threads, [&](std::size_t i)
        {
            for (std::size_t j = i; j < n; ++j)
                r(i, j) = oracle_entry_ura(g, g.unflat(i), g.unflat(j), ladder).value;
        });
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j)
                r(i, j) = std::conj(r(j, i));
        return r;
    }

    // ----- odd-order residual -------------------------------------------------------

    struct OddSeriesResult
    {
        double value = 0.0;              // imaginary part of the ULA entry carried by odd orders
        std::vector<double> terms;       // contribution of k = 1, 3, ..., k_max
        double last_term = 0.0;
        bool converged = true;           // |last term| <= tolerance
        std::size_t order = 0;
    };

    // Sum over odd k of
    //     (2 / (k pi)) int_0^pi sin(theta) cos(b cos(theta) cos(c)) J_k(b sin(theta) sin(c)) dtheta,
    // the odd azimuthal harmonics of exp(j z sin(phi)) over phi in [0, pi]
    // (Struve H_0 = (4/pi) sum J_k / k) reduced by the theta -> pi - theta symmetry.
    // With exp(+j Delta) entries, oracle = sinc + j * value.
    inline OddSeriesResult odd_term_series_ula(const ArchedUlaGeometry &g, std::size_t m, std::size_t n, int k_max,
                                               const QuadratureLadder &ladder)
    {
        if (k_max < 1 || k_max > 199 || k_max % 2 == 0)
            throw DomainError("odd_term_series_ula: k_max must be odd and in [1, 199]");
        if (m >= g.size() || n >= g.size())
            throw DomainError("odd_term_series_ula: index out of range");

        const auto [b, c] = ula_pair_phase(g, m, n);
        const double along = b * std::cos(c), across = b * std::sin(c);
        const std::size_t count = static_cast<std::size_t>(k_max + 1) / 2;

        auto eval = [&](const QuadratureRule &rule)
        {
            std::vector<double> terms(count, 0.0);
            const double half = 0.5 * pi;
            for (std::size_t i = 0; i < rule.order(); ++i)
            {
                const double theta = half + half * rule.nodes[i];
                const double w = rule.weights[i] * half * std::sin(theta) * std::cos(along * std::cos(theta));
                const double z = across * std::sin(theta);
                for (std::size_t t = 0; t < count; ++t)
                {
                    const int k = 2 * static_cast<int>(t) + 1;
                    terms[t] += w * bessel_j(k, z);
                }
            }
            for (std::size_t t = 0; t < count; ++t)
                terms[t] *= 2.0 / (static_cast<double>(2 * t + 1) * pi);
            return terms;
        };
        auto sum = [](const std::vector<double> &v)
        {
            double s = 0.0;
            for (double x : v)
                s += x;
            return s;
        };

        auto [terms, order] = detail::converge_ladder<std::vector<double>>(
            ladder, eval, [&](const std::vector<double> &a, const std::vector<double> &b) { return std::fabs(sum(a) - sum(b)); },
            "odd_term_series_ula");

        OddSeriesResult out;
        out.value = sum(terms);
        out.last_term = terms.back();
        out.converged = std::fabs(out.last_term) <= ladder.settings().tolerance;
        out.terms = std::move(terms);
        out.order = order;
        return out;
    }

    inline OddSeriesResult odd_term_series_ula(const ArchedUlaGeometry &g, std::size_t m, std::size_t n, int k_max,
                                               const OracleSettings &s = {})
    {
        return odd_term_series_ula(g, m, n, k_max, QuadratureLadder(s));
    }

    // ----- validation ---------------------------------------------------------------

    struct PairCheck
    {
        std::size_t i = 0; // flat element indices
        std::size_t j = 0;
        double closed = 0.0;
        double oracle_re = 0.0;
        double oracle_im = 0.0;
        std::size_t order = 0;

        double real_error() const { return std::fabs(closed - oracle_re); }
    };

    struct ValidationReport
    {
        std::string array_type;
        std::vector<std::size_t> shape; // {N} or {M, N}
        std::vector<PairCheck> pairs;
        double max_abs_real_error = 0.0;
        double max_abs_imag_part = 0.0;
        std::size_t quadrature_order = 0; // largest accepted order over all pairs
        std::uint64_t seed = 0;
        bool exhaustive = false;
    };

    inline constexpr std::size_t exhaustive_pair_limit = 256;

    // All unordered pairs (i <= j) when there are at most 256, otherwise
    // `samples` pairs drawn with a seeded 64-bit Mersenne twister.
    inline std::vector<std::pair<std::size_t, std::size_t>> select_pairs(std::size_t dim, std::size_t samples,
                                                                         std::uint64_t seed, bool &exhaustive)
    {
        if (samples < 1)
            throw DomainError("validate: pair sample count must be >= 1");
        std::vector<std::pair<std::size_t, std::size_t>> out;
        const std::size_t total = dim * (dim + 1) / 2;
        exhaustive = total <= exhaustive_pair_limit;
        if (exhaustive)
        {
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = i; j < dim; ++j)
                    out.emplace_back(i, j);
            return out;
        }
        std::mt19937_64 rng(seed);
        for (std::size_t s = 0; s < samples; ++s)
        {
            std::size_t i = static_cast<std::size_t>(rng() % dim);
            std::size_t j = static_cast<std::size_t>(rng() % dim);
            if (i > j)
                std::swap(i, j);
            out.emplace_back(i, j);
        }
        return out;
    }

    namespace detail
    {
        template <typename Closed, typename Oracle>
        ValidationReport run_validation(std::size_t dim, std::size_t samples, std::uint64_t seed, std::size_t threads,
                                        Closed &&closed, Oracle &&oracle)
        {
            ValidationReport rep;
            rep.seed = seed;
            const auto pairs = select_pairs(dim, samples, seed, rep.exhaustive);
            rep.pairs.resize(pairs.size());
            parallel_for(pairs.size(), threads, [&](std::size_t k)
            {
                const auto [i, j] = pairs[k];
                OracleEstimate est;
                try
                {
                    est = oracle(i, j);
                }
                catch (const NumericError &e)
                {
                    throw NumericError("validate: pair (" + std::to_string(i) + ", " + std::to_string(j) + "): " + e.what());
                }
                rep.pairs[k] = {i, j, closed(i, j), est.value.real(), est.value.imag(), est.order};
            });
            for (const PairCheck &p : rep.pairs)
            {
                rep.max_abs_real_error = std::max(rep.max_abs_real_error, p.real_error());
                rep.max_abs_imag_part = std::max(rep.max_abs_imag_part, std::fabs(p.oracle_im));
                rep.quadrature_order = std::max(rep.quadrature_order, p.order);
            }
            return rep;
        }
    }

    inline ValidationReport validate(const ArchedUlaGeometry &g, std::size_t samples, const OracleSettings &s,
                                     std::uint64_t seed = 0, std::size_t threads = 1)
    {
        const QuadratureLadder ladder(s);
        ValidationReport rep = detail::run_validation(
            g.size(), samples, seed, threads, [&](std::size_t i, std::size_t j) { return corr_ula_entry(g, i, j); },
            [&](std::size_t i, std::size_t j) { return oracle_entry_ula(g, i, j, ladder); });
        rep.array_type = "ula";
        rep.shape = {g.size()};
        return rep;
    }

    inline ValidationReport validate(const ArchedUraGeometry &g, std::size_t samples, const OracleSettings &s,
                                     std::uint64_t seed = 0, std::size_t threads = 1)
    {
        const QuadratureLadder ladder(s);
        ValidationReport rep = detail::run_validation(
            g.size(), samples, seed, threads,
            [&](std::size_t i, std::size_t j) { return corr_ura_entry(g, g.unflat(i), g.unflat(j)); },
            [&](std::size_t i, std::size_t j) { return oracle_entry_ura(g, g.unflat(i), g.unflat(j), ladder); });
        rep.array_type = "ura";
        rep.shape = {g.rows(), g.per_arc()};
        return rep;
    }
}

#endif
