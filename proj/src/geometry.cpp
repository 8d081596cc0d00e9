// SPDX-License-Identifier: Apache-2.0
//
// mimolab: LoS massive MIMO array geometry and channel conditioning laboratory
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

#include "mimolab/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mimolab/errors.hpp"

namespace mimolab
{
    namespace
    {
        void check_common(int n_elements, double spacing_wl, double wavelength_m,
                          const char *where)
        {
            if (n_elements < 2)
                throw invalid_parameter_error(std::string(where) + ": n_elements must be at least 2, got " +
                                              std::to_string(n_elements));
            if (!(spacing_wl > 0.0))
                throw invalid_parameter_error(std::string(where) + ": spacing must be positive, got " +
                                              std::to_string(spacing_wl));
            if (!(wavelength_m > 0.0))
                throw invalid_parameter_error(std::string(where) + ": wavelength must be positive, got " +
                                              std::to_string(wavelength_m));
        }
    }

    const char *array_kind_name(ArrayKind kind)
    {
        switch (kind)
        {
        case ArrayKind::LinearEquispaced:
            return "linear";
        case ArrayKind::LinearSparse:
            return "sparse";
        case ArrayKind::Circular:
            return "circular";
        }
        return "unknown";
    }

    ArrayGeometry linear_equispaced(int n_elements, double spacing_wl, double wavelength_m)
    {
        check_common(n_elements, spacing_wl, wavelength_m, "linear_equispaced");

        const double step = spacing_wl * wavelength_m;
        std::vector<Point2> positions(static_cast<std::size_t>(n_elements));
        for (int i = 0; i < n_elements; ++i)
            positions[static_cast<std::size_t>(i)] = {(i - (n_elements - 1) / 2.0) * step, 0.0};

        return {{ArrayKind::LinearEquispaced, n_elements, spacing_wl, {}, wavelength_m},
                std::move(positions)};
    }

    double chebyshev_eval(int order, double u)
    {
        if (order < 0)
            throw invalid_parameter_error("chebyshev_eval: order must be non-negative");
        if (std::abs(u) > 1.0)
            throw domain_error("chebyshev_eval: abscissa " + std::to_string(u) +
                               " outside [-1, 1]");
        if (order == 0)
            return 1.0;

        double t_prev = 1.0; // T_0
        double t_curr = u;   // T_1
        for (int k = 1; k < order; ++k)
        {
            const double t_next = 2.0 * u * t_curr - t_prev;
            t_prev = t_curr;
            t_curr = t_next;
        }
        return t_curr;
    }

    ArrayGeometry tchebyshev_sparse(int n_elements, double d0_wl,
                                    std::vector<double> alphas, double wavelength_m)
    {
        check_common(n_elements, d0_wl, wavelength_m, "tchebyshev_sparse");

        double alpha_sum = 0.0;
        for (double a : alphas)
            alpha_sum += a;

        // Half-aperture; keeps the mean spacing at exactly d0 wavelengths.
        const double half_aperture = (n_elements - 1) * d0_wl * wavelength_m / 2.0;

        const auto abscissa = [&](int i) {
            const double u = -1.0 + 2.0 * i / (n_elements - 1.0);
            double x = (1.0 - alpha_sum) * u;
            for (std::size_t p = 0; p < alphas.size(); ++p)
                x += alphas[p] * chebyshev_eval(2 * static_cast<int>(p) + 3, u);
            return half_aperture * x;
        };

        // Negative half computed, positive half mirrored: symmetry is exact.
        std::vector<Point2> positions(static_cast<std::size_t>(n_elements));
        for (int i = 0; i < n_elements / 2; ++i)
        {
            const double x = abscissa(i);
            positions[static_cast<std::size_t>(i)] = {x, 0.0};
            positions[static_cast<std::size_t>(n_elements - 1 - i)] = {-x, 0.0};
        }
        if (n_elements % 2 == 1)
            positions[static_cast<std::size_t>(n_elements / 2)] = {0.0, 0.0};

        for (int i = 0; i + 1 < n_elements; ++i)
        {
            if (!(positions[static_cast<std::size_t>(i + 1)].x > positions[static_cast<std::size_t>(i)].x))
                throw monotonicity_error(
                    "tchebyshev_sparse: positions not strictly increasing between elements " +
                        std::to_string(i) + " and " + std::to_string(i + 1),
                    static_cast<std::size_t>(i));
        }

        return {{ArrayKind::LinearSparse, n_elements, d0_wl, std::move(alphas), wavelength_m},
                std::move(positions)};
    }

    bool validate_monotonic(std::span<const double> x)
    {
        if (x.size() < 2)
            throw invalid_parameter_error("validate_monotonic: need at least 2 positions");
        for (std::size_t i = 0; i + 1 < x.size(); ++i)
            if (!(x[i + 1] > x[i]))
                return false;
        return true;
    }

    ArrayGeometry circular(int n_elements, double spacing_wl, double wavelength_m)
    {
        check_common(n_elements, spacing_wl, wavelength_m, "circular");

        // Radius chosen so the arc between neighbours is exactly one spacing.
        const double radius = n_elements * spacing_wl * wavelength_m / (2.0 * std::numbers::pi);
        std::vector<Point2> positions(static_cast<std::size_t>(n_elements));
        for (int k = 0; k < n_elements; ++k)
        {
            const double theta = 2.0 * std::numbers::pi * k / n_elements;
            positions[static_cast<std::size_t>(k)] = {radius * std::sin(theta),
                                                      radius * std::cos(theta)};
        }

        return {{ArrayKind::Circular, n_elements, spacing_wl, {}, wavelength_m},
                std::move(positions)};
    }

    double far_field_distance(int n_elements, double spacing_wl, double wavelength_m)
    {
        check_common(n_elements, spacing_wl, wavelength_m, "far_field_distance");
        const double aperture = (n_elements - 1) * spacing_wl * wavelength_m;
        return 2.0 * aperture * aperture / wavelength_m;
    }

    std::vector<double> abscissas(const ArrayGeometry &geometry)
    {
        std::vector<double> x;
        x.reserve(geometry.positions.size());
        for (const Point2 &p : geometry.positions)
            x.push_back(p.x);
        return x;
    }

    std::vector<double> adjacent_spacings_wl(const ArrayGeometry &geometry)
    {
        std::vector<double> spacings;
        spacings.reserve(geometry.positions.size());
        for (std::size_t i = 0; i + 1 < geometry.positions.size(); ++i)
        {
            const double dx = geometry.positions[i + 1].x - geometry.positions[i].x;
            const double dy = geometry.positions[i + 1].y - geometry.positions[i].y;
            spacings.push_back(std::hypot(dx, dy) / geometry.recipe.wavelength_m);
        }
        return spacings;
    }

    double aperture_m(const ArrayGeometry &geometry)
    {
        if (geometry.recipe.kind == ArrayKind::Circular)
        {
            const Point2 &p = geometry.positions.front();
            return 2.0 * std::hypot(p.x, p.y);
        }
        return geometry.positions.back().x - geometry.positions.front().x;
    }
}
