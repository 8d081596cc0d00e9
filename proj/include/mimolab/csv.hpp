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

#ifndef mimolab_csv_H
#define mimolab_csv_H

#include <filesystem>
#include <string>

#include "mimolab/experiments.hpp"
#include "mimolab/geometry.hpp"
#include "mimolab/propagation.hpp"
#include "mimolab/scenarios.hpp"

namespace mimolab
{
    // All numbers in result files go through this: 12 significant digits,
    // locale-independent, NaN spelled "nan".
    std::string format_g12(double value);

    // index,x_m,y_m
    void write_geometry_csv(const std::filesystem::path &path, const ArrayGeometry &geometry);

    // k,x_m,y_m
    void write_layout_csv(const std::filesystem::path &path, const TerminalLayout &layout);

    // n,k,re,im  (debug export)
    void write_channel_csv(const std::filesystem::path &path, const ChannelMatrix &matrix);

    // Long-format sweep table: axis columns, then stat,value; one row per
    // cell per statistic, cells row-major with the last axis fastest.
    std::string sweep_to_csv(const SweepResult &result);

    // alpha,objective_db  (sparse-search curve)
    std::string alpha_curve_to_csv(const SweepResult &result);

    struct ExperimentFiles
    {
        std::filesystem::path csv;
        std::filesystem::path sidecar;
    };

    // Writes <experiment>_<timestamp>_<seedhex>.csv plus the .json metadata
    // sidecar into the output directory. File contents depend only on the
    // result (the timestamp appears in the name, never inside the files).
    ExperimentFiles write_sweep_files(const SweepResult &result,
                                      const std::filesystem::path &output_dir);
}

#endif
