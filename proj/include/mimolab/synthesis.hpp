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

#ifndef mimolab_synthesis_H
#define mimolab_synthesis_H

#include <cstdint>
#include <span>
#include <vector>

#include "mimolab/propagation.hpp"
#include "mimolab/scenarios.hpp"

namespace mimolab
{
    enum class ObjectiveKind
    {
        MeanCondition,     // mean condition number over the ensemble
        QuantileCondition  // a high quantile of the condition number
    };

    // Figure of merit for the sparse-array search: a statistic of the
    // channel condition number over a seeded scenario ensemble.
    struct ObjectiveSpec
    {
        ObjectiveKind kind = ObjectiveKind::MeanCondition;
        double quantile_level = 0.99;  // only for QuantileCondition
        ScenarioSpec scenario;         // terminal distribution, includes K
        int n_scenarios = 1000;
        std::uint64_t master_seed = 1;
    };

    // Objective curve of the single-coefficient search.
    struct AlphaSearchResult
    {
        double best_alpha = 0.0;
        std::vector<double> alphas;
        std::vector<double> objective_db;
    };

    // Objective value for one shape coefficient: builds the sparse array,
    // runs the seeded scenarios, normalizes every channel matrix and reduces
    // the condition numbers to the requested statistic. The scenario set is
    // a function of the master seed only, so different alpha values see the
    // same terminals (common random numbers). alpha1 must lie strictly
    // inside the admissible interval (-1/8, 1/4).
    double evaluate_alpha(double alpha1, double d0_wl, int n_antennas,
                          const ObjectiveSpec &objective, const ChannelModel &model,
                          int workers = 0);

    // Evaluates the objective on an evenly spaced alpha grid and returns the
    // argmin together with the whole curve. The grid must lie inside the
    // admissible interval; ties break toward the alpha closest to zero.
    AlphaSearchResult search_alpha(double alpha_lo, double alpha_hi, int grid_points,
                                   const ObjectiveSpec &objective, double d0_wl,
                                   int n_antennas, const ChannelModel &model,
                                   int workers = 0);

    // Index of the smallest value; on exact ties the alpha nearest zero wins.
    std::size_t argmin_nearest_zero(std::span<const double> alphas,
                                    std::span<const double> values);
}

#endif
