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

#ifndef RISBAL_BEAMFORM_HPP
#define RISBAL_BEAMFORM_HPP

#include "risbal/channel.hpp"
#include "risbal/manifold.hpp"

#include <vector>

namespace risbal
{
    // Effective downlink channel of each user; entry k is h_k with the physical row being h_k^H
    struct CompositeChannels
    {
        std::vector<cvec> rows;
    };

    struct Beamformer
    {
        cmat F;                    // N x K, column k serves user k
        double power_budget = 0.0; // [W]
    };

    // Cell 1 is fully blocked on the direct path: h_k^H = phi^H diag(h_r1_k^H) G1
    CompositeChannels composite_cell1(const ReflectionVector &phi, const ChannelSet &channels);

    // h_k^H = h_d2_k^H + e^{j theta} phi^H diag(h_r2_k^H) G2
    CompositeChannels composite_cell2(const ReflectionVector &phi, const ChannelSet &channels);

    // What BS 2 knows about its users: the direct links only
    CompositeChannels direct_cell2(const ChannelSet &channels);

    // SLNR precoder with equal power allocation:
    //   v_k = (sum_{j != k} h_j h_j^H + (K sigma^2 / P) I)^{-1} h_k
    //   f_k = sqrt(P / K) v_k / |v_k|
    Beamformer slnr_beamformer(const CompositeChannels &channels, double power_budget, double noise_var);

} // namespace risbal

#endif
