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

#ifndef mimolab_config_H
#define mimolab_config_H

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mimolab/geometry.hpp"
#include "mimolab/types.hpp"

namespace mimolab
{
    // One concrete array: kind, spacing (mean spacing d0 for sparse layouts)
    // and the sparse shape coefficients.
    struct GeomSpec
    {
        ArrayKind kind = ArrayKind::LinearEquispaced;
        double spacing_wl = 0.5;
        std::vector<double> alphas;

        std::string label() const; // e.g. "linear_d0.5", "sparse_d2_a-0.03"
    };

    // Resolved run configuration: defaults, overlaid by a JSON config file,
    // overlaid by CLI flags. Validation happens before any computation and
    // unknown JSON keys are rejected.
    struct RunConfig
    {
        double frequency_hz = 60e9;
        int n_antennas = 200;
        std::uint64_t master_seed = 1;
        int workers = 0; // 0 = all hardware threads
        std::string output_dir = ".";
        int m_scenarios = 1000;
        double snr_db = 5.0;
        std::complex<double> gamma{1.0, 0.0};

        GeomSpec geometry;

        // Terminal scenario distribution.
        int k_users = 50;
        double phi_s_rad = 1.0471975511965976; // pi/3 sector half-angle
        double r_min_m = 5.0;
        double r_max_m = 200.0;
        std::optional<bool> full_circle; // unset: circular arrays sample the full circle

        // Sweep axes.
        std::vector<double> d_values_wl; // default 0.5:0.1:2.0
        std::vector<int> k_values;       // default 5:5:100
        int bins = 60;

        // Radial correlation map.
        double map_r_min_m = 1.0;
        double map_r_max_m = 100.0;
        int map_r_points = 200;
        double map_azimuth_rad = 0.0;

        // Plane correlation map.
        Point2 fixed_terminal{0.0, 50.0};
        double map_x_min_m = -200.0;
        double map_x_max_m = 200.0;
        double map_y_min_m = 1.0;
        double map_y_max_m = 200.0;
        int map_points = 200;

        // Sparse-array search.
        double alpha_min = -0.12;
        double alpha_max = 0.24;
        int alpha_points = 37;
        std::string objective = "mean"; // "mean" or "quantile"
        double quantile_level = 0.99;

        // Geometry set compared by the rate sweep.
        std::vector<GeomSpec> zf_geometries;

        double wavelength_m() const { return speed_of_light / frequency_hz; }
    };

    // Defaults as listed above with the standard sweep axes filled in.
    RunConfig default_config();

    // Strict JSON parsing: unknown keys anywhere in the document fail with
    // invalid_parameter_error naming the key.
    RunConfig config_from_json(const nlohmann::json &document);
    RunConfig load_config(const std::string &path);

    // Full resolved configuration, suitable for result-file sidecars and
    // for feeding back through config_from_json to reproduce a run.
    nlohmann::json config_to_json(const RunConfig &config);

    // Cross-field validation; throws invalid_parameter_error naming the field.
    void validate_config(const RunConfig &config);

    ArrayKind array_kind_from_string(const std::string &name);
}

#endif
