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

#ifndef RISBAL_TEST_UTIL_HPP
#define RISBAL_TEST_UTIL_HPP

#include "risbal/channel.hpp"
#include "risbal/manifold.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>
#include <numbers>
#include <random>

namespace risbal::testing
{
    inline cdouble randn_c(Rng &rng)
    {
        std::normal_distribution<double> n(0.0, 1.0);
        double re = n(rng);
        double im = n(rng);
        return {re, im};
    }

    inline cvec random_cvec(Eigen::Index m, Rng &rng)
    {
        cvec v(m);
        for (auto &z : v)
            z = randn_c(rng);
        return v;
    }

    inline cmat random_cmat(Eigen::Index rows, Eigen::Index cols, Rng &rng)
    {
        cmat a(rows, cols);
        for (Eigen::Index c = 0; c < cols; ++c)
            for (Eigen::Index r = 0; r < rows; ++r)
                a(r, c) = randn_c(rng);
        return a;
    }

    inline cmat random_hermitian(Eigen::Index m, Rng &rng)
    {
        cmat b = random_cmat(m, m, rng);
        return 0.5 * (b + b.adjoint());
    }

    inline ReflectionVector random_phi(Eigen::Index m, Rng &rng)
    {
        std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
        Eigen::VectorXd p(m);
        for (auto &x : p)
            x = u(rng);
        return ReflectionVector::from_phases(p);
    }

    // Quadratic form phi^H R phi as an explicit double sum
    inline cdouble quad_form_double_sum(const cvec &phi, const cmat &R)
    {
        cdouble acc = 0.0;
        for (Eigen::Index m = 0; m < phi.size(); ++m)
            for (Eigen::Index n = 0; n < phi.size(); ++n)
                acc += std::conj(phi[m]) * R(m, n) * phi[n];
        return acc;
    }

    // Exhaustive search of max phi^H R phi over `levels` phases per element
    inline double grid_max_quadratic(const cmat &R, int levels)
    {
        const Eigen::Index m = R.rows();
        std::vector<int> idx(static_cast<std::size_t>(m), 0);
        cvec phi(m);
        double best = -std::numeric_limits<double>::infinity();
        while (true)
        {
            for (Eigen::Index i = 0; i < m; ++i)
                phi[i] = std::polar(1.0, 2.0 * std::numbers::pi * idx[static_cast<std::size_t>(i)] / levels);
            best = std::max(best, quad_form_double_sum(phi, R).real());
            Eigen::Index i = 0;
            while (i < m && ++idx[static_cast<std::size_t>(i)] == levels)
                idx[static_cast<std::size_t>(i++)] = 0;
            if (i == m)
                break;
        }
        return best;
    }

} // namespace risbal::testing

#endif
