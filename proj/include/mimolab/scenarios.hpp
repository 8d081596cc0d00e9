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

#ifndef mimolab_scenarios_H
#define mimolab_scenarios_H

#include <cstdint>
#include <span>
#include <vector>

#include "mimolab/types.hpp"

namespace mimolab
{
    // Positions of the K user terminals of one scenario, meters.
    struct TerminalLayout
    {
        std::vector<Point2> positions;

        int size() const { return static_cast<int>(positions.size()); }
    };

    // Random-scenario recipe: K terminals drawn independently, azimuth
    // uniform in [-phi_s, phi_s] (or the full circle), range uniform in
    // [r_min, r_max]. Azimuth 0 is broadside, the +y axis.
    struct ScenarioSpec
    {
        int k_users = 1;
        double phi_s_rad = 1.0471975511965976; // pi/3
        double r_min_m = 5.0;
        double r_max_m = 200.0;
        bool full_circle = false;
    };

    // Addresses one scenario of a seeded ensemble. Distinct scenario indices
    // under the same master seed give independent draws.
    struct SeedSpec
    {
        std::uint64_t master_seed = 1;
        std::uint64_t scenario_index = 0;
    };

    // Counter-based uniform draw on [0, 1): a pure function of the four key
    // components, so generation is reproducible for any evaluation order and
    // any number of workers. Keys are chained through the splitmix64
    // finalizer; the top 53 bits of the hash become the mantissa.
    double unit_uniform(std::uint64_t master_seed, std::uint64_t scenario_index,
                        std::uint64_t terminal_index, std::uint64_t dimension);

    // Draws the terminal layout for one scenario. Deterministic in
    // (spec, seed); terminal t of scenario i is independent of every other
    // (i, t) pair.
    TerminalLayout sample_scenario(const ScenarioSpec &spec, const SeedSpec &seed);

    // Two-terminal layouts with both terminals at the same azimuth and all
    // (r1, r2) combinations of the given ranges, r1 varying slowest.
    std::vector<TerminalLayout> two_terminal_radial_grid(std::span<const double> r1_values_m,
                                                         std::span<const double> r2_values_m,
                                                         double azimuth_rad = 0.0);

    // Two-terminal layouts pairing a fixed terminal with every point of an
    // x/y grid (x varying slowest). Grid points on the array axis
    // (|y| < 1e-6 m) are skipped.
    std::vector<TerminalLayout> plane_grid(Point2 fixed_terminal,
                                           std::span<const double> x_values_m,
                                           std::span<const double> y_values_m);
}

#endif
