// SPDX-License-Identifier: Apache-2.0
//
// risbal - RIS reflection design for multi-operator cellular downlinks
// Copyright (C) 2026 The risbal authors
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

#ifndef RISBAL_SCENARIO_HPP
#define RISBAL_SCENARIO_HPP

#include "risbal/channel.hpp"

#include <cstdint>
#include <numbers>
#include <string>

namespace risbal
{
    // Full description of a two-cell deployment and how it is simulated.
    // Defaults: 4x4 BS arrays, 8x16 RIS, K = 4, P_T = 30 dBm, noise -104 dBm,
    // theta = pi/6, lambda = 20 dB, and one set of Rician parameters per link family.
    struct ScenarioConfig
    {
        ArrayGeometry bs1_array{4, 4, 0.5};
        ArrayGeometry bs2_array{4, 4, 0.5};
        ArrayGeometry ris_array{8, 16, 0.5};

        Position3D bs1_position{0.0, 0.0, 15.0};
        Position3D bs2_position{80.0, 0.0, 15.0};
        Position3D ris_position{40.0, 25.0, 10.0};
        Position3D cell1_center{45.0, 15.0, 1.0}; // z is the user height
        double cell1_radius = 10.0;
        Position3D cell2_center{75.0, 10.0, 1.0};
        double cell2_radius = 10.0;

        int users_per_cell = 4;

        RicianLinkParams direct_link{4.2, 3.0, 8, 10.0};
        RicianLinkParams ris_user_link{2.4, 5.0, 4, 10.0};
        RicianLinkParams bs_ris_link{2.5, 5.0, 8, 10.0};
        double pathloss_c0_db = -30.0;
        double pathloss_d0_m = 1.0;

        double p_t_dbm = 30.0;
        double noise_dbm = -104.0;
        double theta_rad = std::numbers::pi / 6.0;
        double lambda_db = 20.0; // -inf gives lambda = 0

        int num_drops = 100;
        std::uint64_t seed = 1;

        // Throws ConfigError naming the offending field
        void validate() const;
    };

    // Flat "key = value" text, one entry per line, '#' starts a comment.
    // Keys are the field names above; struct members are addressed with a dot
    // (ris_array.horizontal_count, direct_link.rician_factor_db) and positions
    // take three comma-separated numbers. Unknown or repeated keys are errors.
    ScenarioConfig parse_scenario(const std::string &text, ScenarioConfig base = {});

    // Throws ConfigError naming the path when the file cannot be read
    ScenarioConfig load_scenario_file(const std::string &path);

    // Writes every key so that parse_scenario(format_scenario(c)) == c
    std::string format_scenario(const ScenarioConfig &cfg);

} // namespace risbal

#endif
