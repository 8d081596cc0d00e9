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

#ifndef mimolab_analysis_H
#define mimolab_analysis_H

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "mimolab/propagation.hpp"

namespace mimolab
{
    // Singular values of one channel matrix, descending.
    struct SingularSpectrum
    {
        std::vector<double> values;
    };

    // Descriptive statistics of one scalar ensemble.
    struct EnsembleStats
    {
        double mean = 0.0;
        double stddev = 0.0;                              // population std
        std::vector<double> bin_edges;                    // bins + 1 edges over [min, max]
        std::vector<std::size_t> counts;                  // histogram, sums to n_samples
        std::vector<std::pair<double, double>> quantiles; // (level, value)
        std::size_t n_samples = 0;
    };

    // Gram matrices with squared-singular-value ratio beyond this are
    // treated as numerically singular by the rate computation.
    inline constexpr double gram_condition_limit = 1e12;

    // Singular values of the channel matrix, descending. Requires N >= K.
    SingularSpectrum singular_values(const ChannelMatrix &matrix);

    // Condition number 20*log10(sigma_1 / sigma_K) in dB; raises
    // singular_matrix_error on a rank-deficient spectrum.
    double condition_number_db(const SingularSpectrum &spectrum);

    // Zero-Forcing sum rate sum_k log2(1 + rho / (N * g_k)) in bit/s/Hz,
    // with g_k the k-th diagonal entry of (H^H H)^-1 and rho the linear SNR.
    // Expects the column-normalized matrix; g_k is obtained from a singular
    // value decomposition of H rather than explicit normal equations.
    double zf_sum_rate(const ChannelMatrix &matrix, double snr_linear);

    // Mean, population std, fixed-width histogram over [min, max] and
    // linearly interpolated quantiles of the samples.
    EnsembleStats ensemble_stats(std::span<const double> samples, int bin_count,
                                 std::span<const double> quantile_levels);

    // Quantile by linear interpolation between order statistics.
    double quantile_linear(std::span<const double> samples, double level);

    // Fixed-order pairwise summation. All ensemble reductions go through
    // this so results do not depend on the number of workers.
    double pairwise_sum(std::span<const double> values);
}

#endif
