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

#include "risbal/metrics.hpp"
#include "risbal/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace risbal
{
    RateReport evaluate(const CompositeChannels &channels, const Beamformer &bf, double noise_var)
    {
        const auto &rows = channels.rows;
        const auto k_users = static_cast<Eigen::Index>(rows.size());
        if (bf.F.cols() != k_users)
            throw DimensionError("evaluate: beamformer has " + std::to_string(bf.F.cols()) + " columns for " +
                                 std::to_string(k_users) + " users");
        if (!(noise_var > 0.0))
            throw ConfigError("evaluate: noise variance must be positive");

        RateReport report;
        report.per_user_sinr.reserve(rows.size());
        report.per_user_rate.reserve(rows.size());
        for (Eigen::Index k = 0; k < k_users; ++k)
        {
            const cvec &h = rows[static_cast<std::size_t>(k)];
            if (h.size() != bf.F.rows())
                throw DimensionError("evaluate: channel length does not match the beamformer");
            // entry j is h_k^H f_j
            const Eigen::RowVectorXcd gains = h.adjoint() * bf.F;
            const double signal = std::norm(gains[k]);
            const double interference = gains.cwiseAbs2().sum() - signal;
            const double sinr = signal / (std::max(interference, 0.0) + noise_var);
            report.per_user_sinr.push_back(sinr);
            report.per_user_rate.push_back(std::log2(1.0 + sinr));
            report.sum_rate += report.per_user_rate.back();
        }
        return report;
    }

} // namespace risbal
