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

#ifndef mimolab_geometry_H
#define mimolab_geometry_H

#include <span>
#include <vector>

#include "mimolab/types.hpp"

namespace mimolab
{
    enum class ArrayKind
    {
        LinearEquispaced,
        LinearSparse,
        Circular
    };

    const char *array_kind_name(ArrayKind kind);

    // Generating parameters of an array, kept next to the positions so that
    // result files can state exactly how the layout was produced.
    struct ArrayRecipe
    {
        ArrayKind kind = ArrayKind::LinearEquispaced;
        int n_elements = 0;
        double spacing_wl = 0.0;        // element spacing in wavelengths; mean spacing d0 for sparse layouts
        std::vector<double> alphas;     // Tchebyshev shape coefficients, empty unless sparse
        double wavelength_m = 0.0;
    };

    // Ordered radiator coordinates in meters plus the recipe that made them.
    // Linear layouts sit on the y = 0 axis, symmetric about the origin and
    // strictly increasing in x; circular layouts sit on a circle centred on
    // the origin. Instances are immutable by convention once built.
    struct ArrayGeometry
    {
        ArrayRecipe recipe;
        std::vector<Point2> positions;

        int size() const { return static_cast<int>(positions.size()); }
    };

    // Equispaced linear array centred on the origin:
    // x_i = (i - (n-1)/2) * spacing * wavelength, y_i = 0.
    ArrayGeometry linear_equispaced(int n_elements, double spacing_wl, double wavelength_m);

    // Chebyshev polynomial T_order(u) on [-1, 1], evaluated with the stable
    // three-term recurrence. |u| > 1 raises domain_error.
    double chebyshev_eval(int order, double u);

    // Symmetric sparse linear array. Element abscissas are an odd-order
    // Chebyshev perturbation of uniform sampling on [-1, 1]:
    //   x_i = L * ((1 - sum(alpha)) * u_i + sum_p alpha_p * T_{2p+1}(u_i))
    // with L = (n-1) * d0 * wavelength / 2, so the mean inter-element
    // spacing is exactly d0 wavelengths and the aperture matches the
    // equispaced array of the same d0. All-zero alphas reproduce
    // linear_equispaced(n, d0). Raises monotonicity_error when the
    // coefficients fold the position vector.
    ArrayGeometry tchebyshev_sparse(int n_elements, double d0_wl,
                                    std::vector<double> alphas, double wavelength_m);

    // True iff x is strictly increasing. Needs at least two entries.
    bool validate_monotonic(std::span<const double> x);

    // Uniform circular array of radius R = n * spacing * wavelength / (2*pi);
    // element k at angle 2*pi*k/n from the +y axis, so the arc length between
    // neighbours equals spacing * wavelength exactly.
    ArrayGeometry circular(int n_elements, double spacing_wl, double wavelength_m);

    // Conventional far-field boundary 2*D^2/lambda of the equispaced array
    // with aperture D = (n-1) * spacing * wavelength. Meters.
    double far_field_distance(int n_elements, double spacing_wl, double wavelength_m);

    // Open admissibility interval (-1/8, 1/4) for the single-coefficient
    // sparse family; outside it the generated positions fold.
    inline constexpr double alpha1_admissible_lo = -0.125;
    inline constexpr double alpha1_admissible_hi = 0.25;

    // Abscissas of a linear geometry (helper for validation and summaries).
    std::vector<double> abscissas(const ArrayGeometry &geometry);

    // Distances between consecutive elements in wavelengths (chord lengths
    // for circular layouts).
    std::vector<double> adjacent_spacings_wl(const ArrayGeometry &geometry);

    // Largest pairwise extent of the layout in meters: (n-1)*d for linear
    // arrays, the diameter for circular ones.
    double aperture_m(const ArrayGeometry &geometry);
}

#endif
