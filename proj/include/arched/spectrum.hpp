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

#ifndef ARCHED_SPECTRUM_HPP
#define ARCHED_SPECTRUM_HPP

#include "arched/correlation_closed.hpp"
#include "arched/errors.hpp"
#include "arched/numerics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <vector>

namespace arched
{
    // Eigenvalues of a correlation matrix, sorted non-increasing
    struct EigenSpectrum
    {
        std::vector<double> values;

        std::size_t dim() const { return values.size(); }
        double max() const { return values.empty() ? 0.0 : values.front(); }
        double min() const { return values.empty() ? 0.0 : values.back(); }
        double sum() const
        {
            double s = 0.0;
            for (double v : values)
                s += v;
            return s;
        }
    };

    // Default relative thresholds for DoF counts
    inline const std::vector<double> &default_dof_thresholds()
    {
        static const std::vector<double> taus{1.0e-1, 1.0e-2, 1.0e-3};
        return taus;
    }

    // Eigenvalues >= -psd_slack * max are treated as zero
    inline constexpr double psd_slack = 1.0e-8;

    struct DofReport
    {
        std::map<double, std::size_t> threshold_counts;
        double effective_rank = 0.0;
        double asymptote = 0.0;
        double beta = 0.0;
        std::size_t dim = 0;
        double max_eigenvalue = 0.0;
        double min_eigenvalue = 0.0;
    };

    namespace detail
    {
        // Symmetrises the working copy in place, then solves
        template <typename Matrix>
        EigenSpectrum spectrum_of(Matrix a)
        {
            if (!a.allFinite())
                throw NumericError("eigen_spectrum: matrix has non-finite entries");
            for (Eigen::Index j = 0; j < a.cols(); ++j)
                for (Eigen::Index i = j; i < a.rows(); ++i)
                {
                    const auto h = 0.5 * (a(i, j) + Eigen::numext::conj(a(j, i)));
                    a(i, j) = h;
                    a(j, i) = Eigen::numext::conj(h);
                }
            Eigen::SelfAdjointEigenSolver<Matrix> solver(a, Eigen::EigenvaluesOnly);
            if (solver.info() != Eigen::Success)
                throw NumericError("eigen_spectrum: eigensolver did not converge");
            const auto &ev = solver.eigenvalues();
            EigenSpectrum s;
            s.values.assign(ev.data(), ev.data() + ev.size());
            std::sort(s.values.begin(), s.values.end(), std::greater<>());
            return s;
        }
    }

    // Spectrum of the symmetrised matrix (R + R^T) / 2
    inline EigenSpectrum eigen_spectrum(const RealCorrelation &r)
    {
        const auto n = static_cast<Eigen::Index>(r.dim());
        Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> view(r.data().data(), n, n);
        return detail::spectrum_of(Eigen::MatrixXd(view));
    }

    // Spectrum of the Hermitian part (R + R^H) / 2
    inline EigenSpectrum eigen_spectrum(const ComplexCorrelation &r)
    {
        const auto n = static_cast<Eigen::Index>(r.dim());
        Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> view(r.data().data(), n, n);
        return detail::spectrum_of(Eigen::MatrixXcd(view));
    }

    // Number of eigenvalues >= tau * max
    inline std::size_t dof_threshold(const EigenSpectrum &s, double tau)
    {
        if (s.values.empty())
            throw DomainError("dof_threshold: empty spectrum");
        if (!(tau > 0.0 && tau < 1.0))
            throw DomainError("dof_threshold: tau must lie in (0, 1)");
        const double cut = tau * s.max();
        return static_cast<std::size_t>(std::count_if(s.values.begin(), s.values.end(), [cut](double v) { return v >= cut; }));
    }

    inline void check_psd(const EigenSpectrum &s)
    {
        if (s.values.empty())
            return;
        if (s.min() < -psd_slack * std::fabs(s.max()))
        {
            std::ostringstream msg;
            msg.precision(17);
            msg << "PSD violation: min eigenvalue " << s.min() << " below -1e-8 * max (" << s.max() << ")";
            throw NumericError(msg.str());
        }
    }

    // exp of the Shannon entropy of the normalised spectrum
    inline double effective_rank(const EigenSpectrum &s)
    {
        if (s.values.empty())
            throw DomainError("effective_rank: empty spectrum");
        check_psd(s);
        double total = 0.0;
        for (double v : s.values)
            total += std::max(v, 0.0);
        if (!(total > 0.0))
            throw NumericError("effective_rank: all-zero spectrum");
        double entropy = 0.0;
        for (double v : s.values)
        {
            const double p = std::max(v, 0.0) / total;
            if (p > 0.0)
                entropy -= p * std::log(p);
        }
        return std::exp(entropy);
    }

    // 2 L / lambda
    inline double asymptotic_dof_ula(double length, double wavelength)
    {
        if (!(length > 0.0) || !(wavelength > 0.0))
            throw DomainError("asymptotic_dof_ula: inputs must be positive");
        return 2.0 * length / wavelength;
    }

    // pi L^2 / lambda^2
    inline double asymptotic_dof_ura(double length, double wavelength)
    {
        if (!(length > 0.0) || !(wavelength > 0.0))
            throw DomainError("asymptotic_dof_ura: inputs must be positive");
        return pi * length * length / (wavelength * wavelength);
    }

    inline DofReport dof_report(const EigenSpectrum &s, const std::vector<double> &taus, double asymptote, double beta)
    {
        DofReport r;
        for (double tau : taus)
            r.threshold_counts[tau] = dof_threshold(s, tau);
        r.effective_rank = effective_rank(s);
        r.asymptote = asymptote;
        r.beta = beta;
        r.dim = s.dim();
        r.max_eigenvalue = s.max();
        r.min_eigenvalue = s.min();
        return r;
    }
}

#endif
