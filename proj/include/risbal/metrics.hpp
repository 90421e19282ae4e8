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

#ifndef RISBAL_METRICS_HPP
#define RISBAL_METRICS_HPP

#include "risbal/beamform.hpp"

#include <vector>

namespace risbal
{
    struct RateReport
    {
        std::vector<double> per_user_sinr; // linear
        std::vector<double> per_user_rate; // [bit/s/Hz], log2(1 + sinr)
        double sum_rate = 0.0;             // [bit/s/Hz]
    };

    // sinr_k = |h_k^H f_k|^2 / (sum_{j != k} |h_k^H f_j|^2 + noise_var)
    RateReport evaluate(const CompositeChannels &channels, const Beamformer &bf, double noise_var);

} // namespace risbal

#endif
