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

#ifndef mimolab_propagation_H
#define mimolab_propagation_H

#include <armadillo>
#include <complex>

#include "mimolab/geometry.hpp"
#include "mimolab/scenarios.hpp"
#include "mimolab/types.hpp"

namespace mimolab
{
    // Free-space narrowband model: coefficient gamma * exp(-j*beta*R) / R
    // between a radiator and a terminal at distance R. gamma is a plain
    // complex scale, kept configurable although the normalized metrics do
    // not depend on it.
    struct ChannelModel
    {
        double wavelength_m = speed_of_light / 60e9;
        std::complex<double> gamma{1.0, 0.0};

        double wavenumber() const; // beta = 2*pi / wavelength, rad/m
    };

    ChannelModel model_from_frequency(double frequency_hz,
                                      std::complex<double> gamma = {1.0, 0.0});

    // N x K matrix of complex gains between N radiators (rows) and K single
    // antenna terminals (columns).
    struct ChannelMatrix
    {
        arma::cx_mat entries;
        bool normalized = false;

        arma::uword n_antennas() const { return entries.n_rows; }
        arma::uword n_users() const { return entries.n_cols; }
    };

    // Terminals closer than this to a radiator make the 1/R model meaningless.
    inline constexpr double min_path_length_m = 1e-6;

    // Euclidean distance radiator-terminal in the plane, meters.
    double path_length(Point2 antenna, Point2 terminal);

    // Model coefficient at the given distance: magnitude |gamma|/R, phase -beta*R.
    std::complex<double> channel_coefficient(double distance_m, const ChannelModel &model);

    // Builds the full channel matrix; entry (n, k) couples radiator n with
    // terminal k. Raises degenerate_geometry_error if any terminal is within
    // min_path_length_m of a radiator.
    ChannelMatrix build_channel_matrix(const ArrayGeometry &geometry,
                                       const TerminalLayout &terminals,
                                       const ChannelModel &model);

    // Rescales every column to Euclidean norm sqrt(N), removing the
    // distance-dependent power imbalance between users while keeping the
    // column directions. Raises state_error when applied twice.
    ChannelMatrix normalize_columns(const ChannelMatrix &matrix);

    // |h1 . h2*| / (||h1|| ||h2||), in [0, 1]. Invariant to independent
    // complex rescaling of either argument.
    double column_correlation(const arma::cx_vec &h1, const arma::cx_vec &h2);
}

#endif
