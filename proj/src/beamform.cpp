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

#include "risbal/beamform.hpp"
#include "risbal/errors.hpp"

#include <Eigen/Cholesky>

#include <cmath>
#include <string>

namespace risbal
{
    namespace
    {
        // Column form of the reflected row phi^H diag(h_r^H) G, without forming the cascade
        cvec reflected_row(const cvec &phi, const cvec &h_r, const cmat &G)
        {
            if (h_r.size() != phi.size() || G.rows() != phi.size())
                throw DimensionError("composite channel: phi has " + std::to_string(phi.size()) +
                                     " entries but the RIS link has " + std::to_string(h_r.size()) + " / " +
                                     std::to_string(G.rows()));
            // row = (phi .* h_r)^H G, so the column is G^H (phi .* h_r)
            return G.adjoint() * phi.cwiseProduct(h_r);
        }
    } // namespace

    CompositeChannels composite_cell1(const ReflectionVector &phi, const ChannelSet &channels)
    {
        CompositeChannels out;
        out.rows.reserve(channels.h_r1.size());
        for (const auto &h : channels.h_r1)
            out.rows.push_back(reflected_row(phi.entries(), h, channels.G1));
        return out;
    }

    CompositeChannels composite_cell2(const ReflectionVector &phi, const ChannelSet &channels)
    {
        if (channels.h_r2.size() != channels.h_d2.size())
            throw DimensionError("composite_cell2: reflected and direct user counts differ");
        // column form of e^{j theta} row is e^{-j theta} column
        const cdouble rotation = std::polar(1.0, -channels.theta);
        CompositeChannels out;
        out.rows.reserve(channels.h_r2.size());
        for (std::size_t k = 0; k < channels.h_r2.size(); ++k)
        {
            cvec reflected = reflected_row(phi.entries(), channels.h_r2[k], channels.G2);
            if (reflected.size() != channels.h_d2[k].size())
                throw DimensionError("composite_cell2: direct link length does not match BS2 antenna count");
            out.rows.push_back(channels.h_d2[k] + rotation * reflected);
        }
        return out;
    }

    CompositeChannels direct_cell2(const ChannelSet &channels)
    {
        return {channels.h_d2};
    }

    Beamformer slnr_beamformer(const CompositeChannels &channels, double power_budget, double noise_var)
    {
        const auto &rows = channels.rows;
        if (rows.empty())
            throw EmptyInputError("slnr_beamformer: no users");
        if (!(power_budget > 0.0) || !(noise_var > 0.0))
            throw ConfigError("slnr_beamformer: power budget and noise variance must be positive");

        const Eigen::Index n = rows.front().size();
        const Eigen::Index k_users = static_cast<Eigen::Index>(rows.size());
        cmat H(n, k_users);
        for (Eigen::Index k = 0; k < k_users; ++k)
        {
            if (rows[static_cast<std::size_t>(k)].size() != n)
                throw DimensionError("slnr_beamformer: channel rows have different lengths");
            H.col(k) = rows[static_cast<std::size_t>(k)];
        }

        const double regularizer = static_cast<double>(k_users) * noise_var / power_budget;
        const cmat gram = H * H.adjoint();
        const double per_user_amplitude = std::sqrt(power_budget / static_cast<double>(k_users));

        Beamformer bf;
        bf.power_budget = power_budget;
        bf.F.resize(n, k_users);
        for (Eigen::Index k = 0; k < k_users; ++k)
        {
            cmat leakage = gram - H.col(k) * H.col(k).adjoint();
            leakage.diagonal().array() += regularizer;
            Eigen::LDLT<cmat> solver(leakage);
            if (solver.info() != Eigen::Success)
                throw NumericalError("slnr_beamformer: leakage matrix factorization failed");
            cvec v = solver.solve(H.col(k));
            double norm = v.norm();
            if (!(norm > 0.0) || !std::isfinite(norm))
            {
                if (H.col(k).norm() == 0.0)
                    v = cvec::Unit(n, 0); // user with no channel: any direction is optimal
                else
                    throw NumericalError("slnr_beamformer: degenerate beam direction");
                norm = 1.0;
            }
            bf.F.col(k) = per_user_amplitude * v / norm;
        }
        return bf;
    }

} // namespace risbal
