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

#ifndef mimolab_parallel_H
#define mimolab_parallel_H

#include <cstddef>
#include <functional>

namespace mimolab
{
    // Pins the BLAS backend to one thread per call so results stay identical
    // for every worker count and the scenario-level pool is not oversubscribed.
    // Must run before the first linear-algebra call; respects an existing
    // OPENBLAS_NUM_THREADS setting. Idempotent.
    void init_linear_algebra_runtime();

    // Runs fn(0) .. fn(count-1) on up to `workers` threads (0 = all hardware
    // threads). Work items must write only to their own slots; the first
    // exception is rethrown on the caller after all threads join.
    void parallel_for(std::size_t count, int workers,
                      const std::function<void(std::size_t)> &fn);
}

#endif
