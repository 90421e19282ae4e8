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

#ifndef RISBAL_CHANNEL_HPP
#define RISBAL_CHANNEL_HPP

#include "risbal/manifold.hpp"

#include <cstddef>
#include <random>
#include <vector>

namespace risbal
{
    // Random stream used throughout the library; every consumer takes it explicitly
    using Rng = std::mt19937_64;

    struct ScenarioConfig;

    struct Position3D
    {
        double x = 0.0; // [m]
        double y = 0.0; // [m]
        double z = 0.0; // [m], height above ground, >= 0
    };

    double distance(const Position3D &a, const Position3D &b);

    // Uniform planar array in the xz-plane
    struct ArrayGeometry
    {
        int vertical_count = 1;
        int horizontal_count = 1;
        double element_spacing = 0.5; // [wavelengths]

        std::size_t size() const
        {
            return static_cast<std::size_t>(vertical_count) * static_cast<std::size_t>(horizontal_count);
        }
        void validate() const; // throws ConfigError
    };

    struct RicianLinkParams
    {
        double path_loss_exponent = 2.0;
        double rician_factor_db = 0.0;
        int nlos_path_count = 0;
        double angular_spread_deg = 10.0; // half-width of the uniform NLoS angle perturbation

        void validate() const; // throws ConfigError
    };

    struct LosAngles
    {
        double azimuth = 0.0;   // [rad]
        double elevation = 0.0; // [rad]
    };

    // One end of a link: the array and the LoS direction it sees the other end in
    struct LinkEnd
    {
        ArrayGeometry array;
        LosAngles los;
    };

    // One Monte Carlo realization of every link in the two-cell system.
    // Row channels are stored as column vectors h with the physical row being h^H.
    struct ChannelSet
    {
        cmat G1;               // M x N1, BS1 -> RIS
        cmat G2;               // M x N2, BS2 -> RIS
        std::vector<cvec> h_r1; // K1 vectors of length M, RIS -> cell-1 users
        std::vector<cvec> h_r2; // K2 vectors of length M, RIS -> cell-2 users
        std::vector<cvec> h_d2; // K2 vectors of length N2, BS2 -> cell-2 users
        double noise_var_1 = 0.0; // [W]
        double noise_var_2 = 0.0; // [W]
        double theta = 0.0;       // [rad], phase offset of the RIS at the cell-2 carrier
    };

    double db_to_linear(double db);
    double dbm_to_watts(double dbm);

    // Azimuth atan2(dy, dx), elevation atan2(dz, horizontal distance); vertical links get azimuth 0.
    // Throws GeometryError for coincident points.
    LosAngles los_angles(const Position3D &from, const Position3D &to);

    // Row-major over (vertical p, horizontal q):
    // exp(j 2 pi d (p sin(el) + q cos(el) sin(az)))
    cvec upa_steering(double azimuth, double elevation, const ArrayGeometry &geom);

    struct PathLoss
    {
        double gain = 0.0;    // linear power gain
        bool clamped = false; // distance was below the reference distance
    };

    // gain = 10^(c0_db/10) * (d/d0)^(-exponent), with d clamped to d0 from below
    PathLoss path_loss_linear(double distance_m, double exponent, double c0_db, double d0_m);

    // Rician MIMO channel (rx.size() x tx.size()): one LoS path plus L NLoS paths whose
    // angles are drawn uniformly within +/- angular_spread_deg of the LoS angles.
    // The NLoS sum is scaled by 1/sqrt(L) so that E[|H|_F^2] = pl_gain * rows * cols.
    cmat gen_rician_matrix(const LinkEnd &tx, const LinkEnd &rx, const RicianLinkParams &params,
                           double pl_gain, Rng &rng);

    // Draws user positions, then every link of the scenario. Throws ConfigError on an invalid scenario.
    ChannelSet gen_channel_set(const ScenarioConfig &scenario, Rng &rng);

} // namespace risbal

#endif
