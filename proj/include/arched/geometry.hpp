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

#ifndef ARCHED_GEOMETRY_HPP
#define ARCHED_GEOMETRY_HPP

#include "arched/errors.hpp"
#include "arched/numerics.hpp"

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

// Element layouts of arched arrays.
//
// The arc lies in the YZ-plane. Element n (zero-based) sits at central angle
//     alpha_n = n L / ((N - 1) R),   R = L / (2 beta)
// at position (0, R cos(beta - alpha_n) - R cos(beta), R sin(beta - alpha_n)).
// An arched URA stacks M copies of the arc along X at x = m d_x, m = 0..M-1.
//
// All indices in this library are zero-based.

namespace arched
{
    // Bend angles below this threshold use exact straight-line formulas
    inline constexpr double planar_threshold = 1.0e-9;

    struct Point3
    {
        double x = 0.0;
        double y = 0.0;
        double z = 0.0;
    };

    inline double distance(const Point3 &a, const Point3 &b)
    {
        const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
        return std::sqrt(dx * dx + dy * dy + dz * dz);
    }

    // Curvature radius L / (2 beta); std::nullopt is the planar sentinel (beta < 1e-9)
    inline std::optional<double> bend_radius(double arc_length, double bend_angle)
    {
        if (!(arc_length > 0.0) || !std::isfinite(arc_length))
            throw DomainError("bend_radius: arc length must be positive");
        if (!(bend_angle >= 0.0 && bend_angle <= 0.5 * pi))
            throw DomainError("bend_radius: bend angle outside [0, pi/2]");
        if (bend_angle < planar_threshold)
            return std::nullopt;
        return arc_length / (2.0 * bend_angle);
    }

    // A single circular arc of N evenly spaced elements. Shared by the ULA and
    // by every row of the URA.
    class ArcLayout
    {
    public:
        ArcLayout(std::size_t n_elements, double arc_length, double bend_angle)
            : n_(n_elements), length_(arc_length), beta_(bend_angle)
        {
            if (n_elements < 2)
                throw DomainError("arc needs at least 2 elements");
            radius_ = bend_radius(arc_length, bend_angle);
        }

        std::size_t size() const { return n_; }
        double arc_length() const { return length_; }
        double bend_angle() const { return beta_; }
        bool planar() const { return !radius_.has_value(); }
        std::optional<double> radius() const { return radius_; }

        // Spacing along the arc, L / (N - 1)
        double spacing() const { return length_ / static_cast<double>(n_ - 1); }

        // Central angle of element n, in [0, 2 beta]; zero in planar mode
        double central_angle(std::size_t n) const
        {
            check(n);
            if (planar())
                return 0.0;
            return static_cast<double>(n) * (2.0 * beta_) / static_cast<double>(n_ - 1);
        }

        // Element position in the YZ-plane (x = 0)
        Point3 position(std::size_t n) const
        {
            check(n);
            if (planar())
                return {0.0, 0.0, 0.5 * length_ - static_cast<double>(n) * spacing()};
            const double r = *radius_, a = central_angle(n);
            // R (cos(beta - a) - cos beta), written without cancellation
            const double y = 2.0 * r * std::sin(beta_ - 0.5 * a) * std::sin(0.5 * a);
            return {0.0, y, r * std::sin(beta_ - a)};
        }

        // Signed R sin((alpha_n - alpha_m) / 2); tends to (n - m) d / 2 when planar
        double half_chord(std::size_t m, std::size_t n) const
        {
            check(m);
            check(n);
            const double steps = static_cast<double>(n) - static_cast<double>(m);
            if (planar())
                return 0.5 * steps * spacing();
            return *radius_ * std::sin(steps * beta_ / static_cast<double>(n_ - 1));
        }

        // beta - (alpha_m + alpha_n) / 2; zero when planar
        double mid_angle(std::size_t m, std::size_t n) const
        {
            if (planar())
                return 0.0;
            return beta_ - 0.5 * (central_angle(m) + central_angle(n));
        }

        // Chord length between elements separated by `steps` positions
        double chord(std::size_t steps) const
        {
            if (steps >= n_)
                throw DomainError("chord: separation exceeds the arc");
            if (planar())
                return static_cast<double>(steps) * spacing();
            return 2.0 * *radius_ * std::sin(static_cast<double>(steps) * beta_ / static_cast<double>(n_ - 1));
        }

    private:
        void check(std::size_t n) const
        {
            if (n >= n_)
                throw DomainError("element index " + std::to_string(n) + " out of range (size " + std::to_string(n_) + ")");
        }

        std::size_t n_;
        double length_;
        double beta_;
        std::optional<double> radius_;
    };

    inline void check_wavelength(double wavelength)
    {
        if (!(wavelength > 0.0) || !std::isfinite(wavelength))
            throw DomainError("wavelength must be positive");
    }

    // Arched uniform linear array
    class ArchedUlaGeometry
    {
    public:
        ArchedUlaGeometry(std::size_t n_elements, double arc_length, double bend_angle, double wavelength)
            : arc_(n_elements, arc_length, bend_angle), lambda_(wavelength)
        {
            check_wavelength(wavelength);
        }

        std::size_t size() const { return arc_.size(); }
        double arc_length() const { return arc_.arc_length(); }
        double bend_angle() const { return arc_.bend_angle(); }
        double wavelength() const { return lambda_; }
        bool planar() const { return arc_.planar(); }
        std::optional<double> radius() const { return arc_.radius(); }
        double spacing() const { return arc_.spacing(); }
        double central_angle(std::size_t n) const { return arc_.central_angle(n); }
        const ArcLayout &arc() const { return arc_; }

    private:
        ArcLayout arc_;
        double lambda_;
    };

    // (row, position-on-arc) index of a URA element
    struct UraIndex
    {
        std::size_t row = 0;
        std::size_t col = 0;
    };

    // Arched uniform rectangular array: M rows along X, N elements per arc
    class ArchedUraGeometry
    {
    public:
        ArchedUraGeometry(std::size_t rows, std::size_t per_arc, double row_spacing, double arc_length, double bend_angle,
                          double wavelength)
            : rows_(rows), dx_(row_spacing), arc_(per_arc, arc_length, bend_angle), lambda_(wavelength)
        {
            if (rows < 1)
                throw DomainError("URA needs at least one row");
            if (!(row_spacing > 0.0) || !std::isfinite(row_spacing))
                throw DomainError("row spacing must be positive");
            check_wavelength(wavelength);
        }

        std::size_t rows() const { return rows_; }
        std::size_t per_arc() const { return arc_.size(); }
        std::size_t size() const { return rows_ * arc_.size(); }
        double row_spacing() const { return dx_; }
        double arc_length() const { return arc_.arc_length(); }
        double bend_angle() const { return arc_.bend_angle(); }
        double wavelength() const { return lambda_; }
        bool planar() const { return arc_.planar(); }
        std::optional<double> radius() const { return arc_.radius(); }
        const ArcLayout &arc() const { return arc_; }

        // psi_n, the central angle of arc position n
        double central_angle(std::size_t n) const { return arc_.central_angle(n); }

        // Row-major flattening: index = row * N + col
        std::size_t flat(UraIndex e) const
        {
            check(e);
            return e.row * arc_.size() + e.col;
        }

        UraIndex unflat(std::size_t i) const
        {
            if (i >= size())
                throw DomainError("URA flat index out of range");
            return {i / arc_.size(), i % arc_.size()};
        }

        void check(UraIndex e) const
        {
            if (e.row >= rows_ || e.col >= arc_.size())
                throw DomainError("URA element (" + std::to_string(e.row) + ", " + std::to_string(e.col) + ") out of range");
        }

    private:
        std::size_t rows_;
        double dx_;
        ArcLayout arc_;
        double lambda_;
    };

    inline std::vector<Point3> ula_positions(const ArchedUlaGeometry &g)
    {
        std::vector<Point3> out;
        out.reserve(g.size());
        for (std::size_t n = 0; n < g.size(); ++n)
            out.push_back(g.arc().position(n));
        return out;
    }

    inline Point3 ura_position(const ArchedUraGeometry &g, UraIndex e)
    {
        g.check(e);
        Point3 p = g.arc().position(e.col);
        p.x = static_cast<double>(e.row) * g.row_spacing();
        return p;
    }

    // Row-major list of all M * N element positions
    inline std::vector<Point3> ura_positions(const ArchedUraGeometry &g)
    {
        std::vector<Point3> out;
        out.reserve(g.size());
        for (std::size_t m = 0; m < g.rows(); ++m)
            for (std::size_t n = 0; n < g.per_arc(); ++n)
                out.push_back(ura_position(g, {m, n}));
        return out;
    }
}

#endif
