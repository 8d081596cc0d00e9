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

#ifndef mimolab_experiments_H
#define mimolab_experiments_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mimolab/config.hpp"
#include "mimolab/propagation.hpp"
#include "mimolab/scenarios.hpp"

namespace mimolab
{
    struct SweepAxis
    {
        std::string name;
        std::vector<double> values;
    };

    // Gridded statistics over one experiment. Cells are stored row-major
    // with the last axis varying fastest; every statistic covers the full
    // grid and failed cells hold NaN. The metadata block carries the
    // resolved configuration, master seed and code version, enough to
    // reproduce the result bit for bit.
    struct SweepResult
    {
        std::string experiment;
        std::vector<SweepAxis> axes;
        std::vector<std::pair<std::string, std::vector<double>>> cells;
        nlohmann::json metadata;

        std::size_t cell_count() const;
        std::span<const double> stat(const std::string &name) const;
    };

    // Shared Monte Carlo context. Scenario draws are keyed by
    // (master_seed, scenario index, terminal index), so every cell of a
    // sweep and every geometry variant sees the same terminal sets.
    struct ExperimentContext
    {
        int n_antennas = 200;
        ChannelModel model;
        double phi_s_rad = 1.0471975511965976;
        double r_min_m = 5.0;
        double r_max_m = 200.0;
        std::optional<bool> full_circle; // unset: derived from the array kind
        int m_scenarios = 1000;
        std::uint64_t master_seed = 1;
        int workers = 0;

        ScenarioSpec scenario_for(ArrayKind kind, int k_users) const;
    };

    ArrayGeometry make_geometry(const GeomSpec &spec, int n_antennas, double wavelength_m);

    // Mean (and std) of the condition number in dB on the (d, K) grid.
    // Stats: mean_db, std_db, failed.
    SweepResult mean_condition_map(const ExperimentContext &context, const GeomSpec &family,
                                   std::span<const double> d_values_wl,
                                   std::span<const int> k_values);

    // Histogram of the condition number per inter-element distance at fixed K.
    // Axes (d_wl, bin); stats: count, bin_lo_db, bin_hi_db plus the per-d
    // mean_db/std_db replicated along the bin axis.
    SweepResult condition_histogram_sweep(const ExperimentContext &context,
                                          const GeomSpec &family,
                                          std::span<const double> d_values_wl,
                                          int k_users, int bins);

    // Distribution of each ordered singular value at fixed geometry and K.
    // Axes (sigma_index, bin); stats: count, bin_lo, bin_hi, mean_sigma,
    // std_sigma (the last two replicated along the bin axis).
    SweepResult singular_spectrum_sweep(const ExperimentContext &context,
                                        const GeomSpec &family, double d_wl,
                                        int k_users, int bins);

    // Two-terminal correlation on the (r1, r2) grid at fixed azimuth.
    // Stat: chi.
    SweepResult correlation_radial_map(const ExperimentContext &context,
                                       const GeomSpec &geometry,
                                       std::span<const double> r1_values_m,
                                       std::span<const double> r2_values_m,
                                       double azimuth_rad);

    // Correlation between a fixed terminal and every point of an x/y grid.
    // Grid rows on the array axis are NaN. Stat: chi.
    SweepResult correlation_plane_map(const ExperimentContext &context,
                                      const GeomSpec &geometry, Point2 fixed_terminal,
                                      std::span<const double> x_values_m,
                                      std::span<const double> y_values_m);

    // Mean (and std) Zero-Forcing sum rate per geometry and user count,
    // shared scenario seeds across geometries. Axes (geom_index, k_users);
    // stats: mean_rate, std_rate, failed. Geometry labels go to metadata.
    SweepResult zf_rate_vs_users(const ExperimentContext &context,
                                 std::span<const GeomSpec> geometries,
                                 std::span<const int> k_values, double snr_db);

    // Sparse-search objective curve as a sweep (axis alpha, stat objective_db).
    SweepResult alpha_sweep(const ExperimentContext &context, double d0_wl, int k_users,
                            double alpha_lo, double alpha_hi, int grid_points,
                            const std::string &objective_kind, double quantile_level);

    inline constexpr const char *experiment_names[] = {
        "corr-radial", "corr-plane", "cond-map", "cond-hist",
        "svd-stats", "alpha-sweep", "zf-rate"};

    // Dispatches one named experiment from a resolved configuration.
    // Unknown names raise invalid_parameter_error.
    SweepResult run_named_experiment(const std::string &name, const RunConfig &config);
}

#endif
