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

#ifndef RISBAL_RIS_DESIGN_HPP
#define RISBAL_RIS_DESIGN_HPP

#include "risbal/channel.hpp"
#include "risbal/manifold.hpp"

#include <cstddef>
#include <vector>

namespace risbal
{
    // Cascaded channels of both cells and their Gram totals
    struct EffectiveChannels
    {
        std::vector<cmat> A1; // K1 matrices, M x N1
        std::vector<cmat> A2; // K2 matrices, M x N2
        cmat Atilde1;         // total reflective channel of cell 1 (M x M)
        cmat Atilde2;         // total uncontrolled channel seen by cell 2 (M x M)
    };

    // R = Atilde1 / |Atilde1|_F - lambda * Atilde2 / |Atilde2|_F
    struct BalanceMatrix
    {
        cmat R;
        double lambda = 0.0;
    };

    // A = diag(h^H) G, i.e. A[m, n] = conj(h[m]) G[m, n]
    cmat cascade(const cvec &h_r, const cmat &G);

    // Sum of A A^H over the list. Throws EmptyInputError on an empty list.
    cmat total_gain_matrix(const std::vector<cmat> &As);

    EffectiveChannels effective_channels(const ChannelSet &channels);

    // Throws NormalizationError when either input has zero Frobenius norm
    BalanceMatrix balance_matrix(const cmat &Atilde1, const cmat &Atilde2, double lambda);

    // -Re(phi^H R phi); throws HermitianViolationError if the imaginary part exceeds 1e-9
    double p1_objective(const ReflectionVector &phi, const BalanceMatrix &R);

    // -R phi. This is half the Wirtinger-consistent gradient; the common factor only
    // rescales the line search.
    cvec p1_euclid_grad(const ReflectionVector &phi, const BalanceMatrix &R);

    // Balanced design from a prepared balance matrix
    RcgResult design_balanced(const BalanceMatrix &R, const RcgConfig &cfg, const ReflectionVector &phi0);

    RcgResult design_balanced(const ChannelSet &channels, double lambda, const RcgConfig &cfg,
                              const ReflectionVector &phi0);

    // Eigen-rounded start point followed by RCG; falls back to random phases from `rng`
    // when the eigen-solve fails
    RcgResult design_balanced(const ChannelSet &channels, double lambda, const RcgConfig &cfg, Rng &fallback_rng);

    // Element-wise normalization of the eigenvector of the largest eigenvalue.
    // Entries that vanish are given phase 0.
    ReflectionVector design_eigen(const BalanceMatrix &R);

    // phi_m = exp(j u_m), u_m ~ U[0, 2 pi)
    ReflectionVector design_random(std::size_t m, Rng &rng);

} // namespace risbal

#endif
