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

#ifndef mimolab_errors_H
#define mimolab_errors_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mimolab
{
    // Bad arguments or configuration; the CLI maps these to exit code 2.
    class invalid_parameter_error : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Requested abscissa outside the domain of the polynomial basis.
    class domain_error : public invalid_parameter_error
    {
    public:
        using invalid_parameter_error::invalid_parameter_error;
    };

    // A generated position vector is not strictly increasing. Carries the
    // index of the first element pair that violates the ordering.
    class monotonicity_error : public invalid_parameter_error
    {
    public:
        monotonicity_error(const std::string &msg, std::size_t index)
            : invalid_parameter_error(msg), index_(index) {}

        std::size_t index() const { return index_; }

    private:
        std::size_t index_ = 0;
    };

    // Terminal placed on (or numerically indistinguishable from) a radiator.
    class degenerate_geometry_error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Rank-deficient or numerically singular channel matrix.
    class singular_matrix_error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Matrix shape the analysis does not support (more users than antennas).
    class unsupported_shape_error : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Operation applied to an object in the wrong state (e.g. normalizing twice).
    class state_error : public std::logic_error
    {
    public:
        using std::logic_error::logic_error;
    };
}

#endif
