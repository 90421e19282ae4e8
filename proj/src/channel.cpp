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

#include "risbal/channel.hpp"
#include "risbal/errors.hpp"
#include "risbal/scenario.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace risbal
{
    namespace
    {
        constexpr double two_pi = 2.0 * std::numbers::pi;

        cdouble complex_normal(Rng &rng)
        {
            std::normal_distribution<double> n(0.0, std::sqrt(0.5));
            double re = n(rng);
            double im = n(rng);
            return {re, im};
        }

        Position3D draw_in_disc(const Position3D &center, double radius, Rng &rng)
        {
            std::uniform_real_distribution<double> u(0.0, 1.0);
            double r = radius * std::sqrt(u(rng));
            double a = two_pi * u(rng);
            return {center.x + r * std::cos(a), center.y + r * std::sin(a), center.z};
        }

        double link_gain(const Position3D &a, const Position3D &b, const RicianLinkParams &p,
                         const ScenarioConfig &sc)
        {
            return path_loss_linear(distance(a, b), p.path_loss_exponent, sc.pathloss_c0_db, sc.pathloss_d0_m).gain;
        }

        const ArrayGeometry single_antenna{1, 1, 0.5};
    } // namespace

    double distance(const Position3D &a, const Position3D &b)
    {
        return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
    }

    void ArrayGeometry::validate() const
    {
        if (vertical_count < 1 || horizontal_count < 1)
            throw ConfigError("ArrayGeometry: element counts must be positive");
        if (!(element_spacing > 0.0) || !std::isfinite(element_spacing))
            throw ConfigError("ArrayGeometry: element_spacing must be positive");
    }

    void RicianLinkParams::validate() const
    {
        if (!(path_loss_exponent > 0.0))
            throw ConfigError("RicianLinkParams: path_loss_exponent must be positive");
        if (nlos_path_count < 0)
            throw ConfigError("RicianLinkParams: nlos_path_count must be nonnegative");
        if (!std::isfinite(rician_factor_db))
            throw ConfigError("RicianLinkParams: rician_factor_db must be finite");
        if (!(angular_spread_deg >= 0.0))
            throw ConfigError("RicianLinkParams: angular_spread_deg must be nonnegative");
    }

    double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

    double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

    LosAngles los_angles(const Position3D &from, const Position3D &to)
    {
        double dx = to.x - from.x;
        double dy = to.y - from.y;
        double dz = to.z - from.z;
        if (dx == 0.0 && dy == 0.0 && dz == 0.0)
            throw GeometryError("los_angles: coincident points");

        double horizontal = std::hypot(dx, dy);
        LosAngles out;
        out.azimuth = horizontal == 0.0 ? 0.0 : std::atan2(dy, dx);
        out.elevation = std::atan2(dz, horizontal);
        return out;
    }

    cvec upa_steering(double azimuth, double elevation, const ArrayGeometry &geom)
    {
        geom.validate();
        const double vertical_phase = std::sin(elevation);
        const double horizontal_phase = std::cos(elevation) * std::sin(azimuth);
        const double k = two_pi * geom.element_spacing;

        cvec a(static_cast<Eigen::Index>(geom.size()));
        Eigen::Index i = 0;
        for (int p = 0; p < geom.vertical_count; ++p)
            for (int q = 0; q < geom.horizontal_count; ++q)
                a[i++] = std::polar(1.0, k * (p * vertical_phase + q * horizontal_phase));
        return a;
    }

    PathLoss path_loss_linear(double distance_m, double exponent, double c0_db, double d0_m)
    {
        PathLoss out;
        double d = distance_m;
        if (d < d0_m)
        {
            d = d0_m;
            out.clamped = true;
        }
        out.gain = db_to_linear(c0_db) * std::pow(d / d0_m, -exponent);
        return out;
    }

    cmat gen_rician_matrix(const LinkEnd &tx, const LinkEnd &rx, const RicianLinkParams &params,
                           double pl_gain, Rng &rng)
    {
        params.validate();
        const cvec a_tx = upa_steering(tx.los.azimuth, tx.los.elevation, tx.array);
        const cvec a_rx = upa_steering(rx.los.azimuth, rx.los.elevation, rx.array);

        const int paths = params.nlos_path_count;
        if (paths == 0)
            return std::sqrt(pl_gain) * (a_rx * a_tx.adjoint());

        const double kappa = db_to_linear(params.rician_factor_db);
        const double spread = params.angular_spread_deg * std::numbers::pi / 180.0;
        std::uniform_real_distribution<double> jitter(-spread, spread);

        cmat nlos = cmat::Zero(a_rx.size(), a_tx.size());
        for (int l = 0; l < paths; ++l)
        {
            cdouble g = complex_normal(rng);
            double tx_az = tx.los.azimuth + jitter(rng);
            double tx_el = tx.los.elevation + jitter(rng);
            double rx_az = rx.los.azimuth + jitter(rng);
            double rx_el = rx.los.elevation + jitter(rng);
            nlos += g * (upa_steering(rx_az, rx_el, rx.array) * upa_steering(tx_az, tx_el, tx.array).adjoint());
        }

        const double los_scale = std::sqrt(kappa / (kappa + 1.0));
        const double nlos_scale = std::sqrt(1.0 / (kappa + 1.0)) / std::sqrt(static_cast<double>(paths));
        return std::sqrt(pl_gain) * (los_scale * (a_rx * a_tx.adjoint()) + nlos_scale * nlos);
    }

    ChannelSet gen_channel_set(const ScenarioConfig &sc, Rng &rng)
    {
        sc.validate();
        const auto k = static_cast<std::size_t>(sc.users_per_cell);

        std::vector<Position3D> users1, users2;
        users1.reserve(k);
        users2.reserve(k);
        for (std::size_t i = 0; i < k; ++i)
            users1.push_back(draw_in_disc(sc.cell1_center, sc.cell1_radius, rng));
        for (std::size_t i = 0; i < k; ++i)
            users2.push_back(draw_in_disc(sc.cell2_center, sc.cell2_radius, rng));

        ChannelSet ch;
        ch.noise_var_1 = dbm_to_watts(sc.noise_dbm);
        ch.noise_var_2 = ch.noise_var_1;
        ch.theta = sc.theta_rad;

        auto bs_to_ris = [&](const Position3D &bs, const ArrayGeometry &bs_array)
        {
            LinkEnd tx{bs_array, los_angles(bs, sc.ris_position)};
            LinkEnd rx{sc.ris_array, los_angles(sc.ris_position, bs)};
            return gen_rician_matrix(tx, rx, sc.bs_ris_link, link_gain(bs, sc.ris_position, sc.bs_ris_link, sc), rng);
        };
        // Single-antenna receivers: the generated 1 x N matrix is the row h^H
        auto to_user = [&](const Position3D &src, const ArrayGeometry &src_array, const Position3D &user,
                           const RicianLinkParams &p) -> cvec
        {
            LinkEnd tx{src_array, los_angles(src, user)};
            LinkEnd rx{single_antenna, los_angles(user, src)};
            cmat row = gen_rician_matrix(tx, rx, p, link_gain(src, user, p, sc), rng);
            return row.adjoint();
        };

        ch.G1 = bs_to_ris(sc.bs1_position, sc.bs1_array);
        ch.G2 = bs_to_ris(sc.bs2_position, sc.bs2_array);
        for (const auto &u : users1)
            ch.h_r1.push_back(to_user(sc.ris_position, sc.ris_array, u, sc.ris_user_link));
        for (const auto &u : users2)
            ch.h_r2.push_back(to_user(sc.ris_position, sc.ris_array, u, sc.ris_user_link));
        for (const auto &u : users2)
            ch.h_d2.push_back(to_user(sc.bs2_position, sc.bs2_array, u, sc.direct_link));
        return ch;
    }

} // namespace risbal
