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

#ifndef ARCHED_WAVEFIELD_HPP
#define ARCHED_WAVEFIELD_HPP

#include "arched/geometry.hpp"
#include "arched/numerics.hpp"

#include <cmath>
#include <vector>

namespace arched
{
    // Plane-wave arrival direction: zenith theta in [0, pi], azimuth phi in [0, pi]
    struct Direction
    {
        double theta = 0.0;
        double phi = 0.0;

        Point3 unit() const
        {
            return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
        }
    };

    inline void check_direction(const Direction &d)
    {
        if (!(d.theta >= 0.0 && d.theta <= pi) || !(d.phi >= 0.0 && d.phi <= pi))
            throw DomainError("direction outside the half-space [0, pi] x [0, pi]");
    }

    struct UserLocation
    {
        double r = 1.0;
        Direction direction;

        Point3 point() const
        {
            const Point3 u = direction.unit();
            return {r * u.x, r * u.y, r * u.z};
        }
    };

    // Unit-norm array response; entries have modulus 1 / sqrt(size)
    struct SteeringVector
    {
        std::vector<Complex> entries;

        std::size_t size() const { return entries.size(); }
        double norm() const
        {
            double s = 0.0;
            for (const Complex &v : entries)
                s += std::norm(v);
            return std::sqrt(s);
        }
    };

    // ----- arched ULA ---------------------------------------------------------------

    inline double exact_distance_ula(const ArchedUlaGeometry &g, const UserLocation &user, std::size_t n)
    {
        if (!(user.r > 0.0))
            throw DomainError("user radius must be positive");
        return distance(user.point(), g.arc().position(n));
    }

    // First-order far-field distance r - u . p_n
    inline double farfield_distance_ula(const ArchedUlaGeometry &g, const UserLocation &user, std::size_t n)
    {
        if (!(user.r > 0.0))
            throw DomainError("user radius must be positive");
        const Point3 p = g.arc().position(n);
        const Direction &d = user.direction;
        return user.r - (std::sin(d.theta) * std::sin(d.phi) * p.y + std::cos(d.theta) * p.z);
    }

    // Product form of the pair phase: Delta_{m,n} = b [sin(theta) sin(phi) sin(c) - cos(theta) cos(c)]
    struct ArcPairPhase
    {
        double b = 0.0; // (4 pi R / lambda) sin((alpha_n - alpha_m) / 2)
        double c = 0.0; // beta - (alpha_m + alpha_n) / 2
    };

    inline ArcPairPhase ula_pair_phase(const ArchedUlaGeometry &g, std::size_t m, std::size_t n)
    {
        return {4.0 * pi / g.wavelength() * g.arc().half_chord(m, n), g.arc().mid_angle(m, n)};
    }

    // Far-field phase difference between elements n and m; antisymmetric in (m, n)
    inline double phase_delta_ula(const ArchedUlaGeometry &g, std::size_t m, std::size_t n, const Direction &dir)
    {
        const auto [b, c] = ula_pair_phase(g, m, n);
        return b * (std::sin(dir.theta) * std::sin(dir.phi) * std::sin(c) - std::cos(dir.theta) * std::cos(c));
    }

    inline SteeringVector steering_ula(const ArchedUlaGeometry &g, const Direction &dir)
    {
        const double k = 2.0 * pi / g.wavelength();
        const double sy = std::sin(dir.theta) * std::sin(dir.phi), sz = std::cos(dir.theta);
        const double scale = 1.0 / std::sqrt(static_cast<double>(g.size()));
        SteeringVector a;
        a.entries.reserve(g.size());
        for (std::size_t n = 0; n < g.size(); ++n)
        {
            const Point3 p = g.arc().position(n);
            a.entries.push_back(std::polar(scale, k * (sy * p.y + sz * p.z)));
        }
        return a;
    }

    // ----- arched URA ---------------------------------------------------------------

    // Phase decomposition A cos(phi) + B sin(phi) + C of a URA element pair.
    // The (y, z) part follows the reference closed-form convention, which is the
    // reflection of the geometric difference: Delta_{p} - Delta_{q} = A cos(phi) - B sin(phi) - C.
    struct UraPhaseTerms
    {
        double a = 0.0;
        double b = 0.0;
        double c = 0.0;
    };

    inline UraPhaseTerms ura_abc(const ArchedUraGeometry &g, UraIndex p, UraIndex q, double theta)
    {
        g.check(p);
        g.check(q);
        const double drow = static_cast<double>(p.row) - static_cast<double>(q.row);
        const double hc = g.arc().half_chord(q.col, p.col); // R sin((psi_n - psi_n') / 2)
        const double mid = g.arc().mid_angle(p.col, q.col);
        return {drow * g.row_spacing() * std::sin(theta), -2.0 * std::sin(theta) * std::sin(mid) * hc,
                2.0 * std::cos(theta) * std::cos(mid) * hc};
    }

    // Theta-free coefficients with A^2 + B^2 = sin^2(theta) D^2 and C = cos(theta) E
    struct UraDistanceTerms
    {
        double d = 0.0;
        double e = 0.0;
    };

    inline UraDistanceTerms ura_de(const ArchedUraGeometry &g, UraIndex p, UraIndex q)
    {
        g.check(p);
        g.check(q);
        const double dx = (static_cast<double>(p.row) - static_cast<double>(q.row)) * g.row_spacing();
        const double hc = g.arc().half_chord(q.col, p.col);
        const double mid = g.arc().mid_angle(p.col, q.col);
        const double vert = 2.0 * hc * std::sin(mid);
        return {std::sqrt(dx * dx + vert * vert), 2.0 * std::cos(mid) * hc};
    }

    // Far-field path advance of element e, m d_x sin(theta) cos(phi) + arc terms
    inline double ura_farfield_offset(const ArchedUraGeometry &g, UraIndex e, const Direction &dir)
    {
        const Point3 p = ura_position(g, e);
        const Point3 u = dir.unit();
        return u.x * p.x + u.y * p.y + u.z * p.z;
    }

    // Entries in row-major order, normalised by 1 / sqrt(M N)
    inline SteeringVector steering_ura(const ArchedUraGeometry &g, const Direction &dir)
    {
        const double k = 2.0 * pi / g.wavelength();
        const double scale = 1.0 / std::sqrt(static_cast<double>(g.size()));
        SteeringVector a;
        a.entries.reserve(g.size());
        for (std::size_t m = 0; m < g.rows(); ++m)
            for (std::size_t n = 0; n < g.per_arc(); ++n)
                a.entries.push_back(std::polar(scale, k * ura_farfield_offset(g, {m, n}, dir)));
        return a;
    }
}

#endif
