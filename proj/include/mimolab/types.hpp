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

#ifndef mimolab_types_H
#define mimolab_types_H

namespace mimolab
{
    inline constexpr double speed_of_light = 299792458.0; // m/s

    // Point in the simulation plane, meters. Base station elements and user
    // terminals share this type; the linear arrays live on the y = 0 axis.
    struct Point2
    {
        double x = 0.0;
        double y = 0.0;
    };
}

#endif
