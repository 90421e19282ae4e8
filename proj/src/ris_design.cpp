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

#include "risbal/ris_design.hpp"
#include "risbal/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>
#include <string>

namespace risbal
{
    namespace
    {
        constexpr double hermitian_tolerance = 1e-9;

        std::vector<cmat> cascade_all(const std::vector<cvec> &hs, const cmat &G)
        {
            std::vector<cmat> out;
            out.reserve(hs.size());
            for (const auto &h : hs)
                out.push_back(cascade(h, G));
            return out;
        }
    } // namespace

    cmat cascade(const cvec &h_r, const cmat &G)
    {
        if (h_r.size() != G.rows())
            throw DimensionError("cascade: h_r has " + std::to_string(h_r.size()) + " entries but G has " +
                                 std::to_string(G.rows()) + " rows");
        return h_r.conjugate().asDiagonal() * G;
    }

    cmat total_gain_matrix(const std::vector<cmat> &As)
    {
        if (As.empty())
            throw EmptyInputError("total_gain_matrix: no cascaded channels");
        const Eigen::Index m = As.front().rows();
        cmat total = cmat::Zero(m, m);
        for (const auto &A : As)
        {
            if (A.rows() != m)
                throw DimensionError("total_gain_matrix: inconsistent row counts");
            total.selfadjointView<Eigen::Lower>().rankUpdate(A);
        }
        return total.selfadjointView<Eigen::Lower>();
    }

    EffectiveChannels effective_channels(const ChannelSet &channels)
    {
        EffectiveChannels eff;
        eff.A1 = cascade_all(channels.h_r1, channels.G1);
        eff.A2 = cascade_all(channels.h_r2, channels.G2);
        eff.Atilde1 = total_gain_matrix(eff.A1);
        eff.Atilde2 = total_gain_matrix(eff.A2);
        return eff;
    }

    BalanceMatrix balance_matrix(const cmat &Atilde1, const cmat &Atilde2, double lambda)
    {
        if (Atilde1.rows() != Atilde1.cols() || Atilde1.rows() != Atilde2.rows() || Atilde1.cols() != Atilde2.cols())
            throw DimensionError("balance_matrix: inputs must be square and of equal size");
        if (!(lambda >= 0.0))
            throw ConfigError("balance_matrix: lambda must be nonnegative");
        const double n1 = Atilde1.norm();
        const double n2 = Atilde2.norm();
        if (!(n1 > 0.0) || !(n2 > 0.0))
            throw NormalizationError("balance_matrix: total channel matrix has zero Frobenius norm");

        BalanceMatrix out;
        out.lambda = lambda;
        out.R = Atilde1 / n1 - lambda * (Atilde2 / n2);
        out.R = (0.5 * (out.R + out.R.adjoint())).eval();
        return out;
    }

    double p1_objective(const ReflectionVector &phi, const BalanceMatrix &R)
    {
        const cvec &p = phi.entries();
        if (p.size() != R.R.rows() || R.R.rows() != R.R.cols())
            throw DimensionError("p1_objective: phi and R sizes disagree");
        cdouble q = p.dot(R.R * p);
        if (std::abs(q.imag()) >= hermitian_tolerance)
            throw HermitianViolationError("p1_objective: phi^H R phi has imaginary part " + std::to_string(q.imag()));
        return -q.real();
    }

    cvec p1_euclid_grad(const ReflectionVector &phi, const BalanceMatrix &R)
    {
        if (phi.entries().size() != R.R.cols())
            throw DimensionError("p1_euclid_grad: phi and R sizes disagree");
        return -(R.R * phi.entries());
    }

    RcgResult design_balanced(const BalanceMatrix &R, const RcgConfig &cfg, const ReflectionVector &phi0)
    {
        return rcg_minimize([&R](const ReflectionVector &p) { return p1_objective(p, R); },
                            [&R](const ReflectionVector &p) { return p1_euclid_grad(p, R); },
                            phi0, cfg);
    }

    RcgResult design_balanced(const ChannelSet &channels, double lambda, const RcgConfig &cfg,
                              const ReflectionVector &phi0)
    {
        EffectiveChannels eff = effective_channels(channels);
        return design_balanced(balance_matrix(eff.Atilde1, eff.Atilde2, lambda), cfg, phi0);
    }

    RcgResult design_balanced(const ChannelSet &channels, double lambda, const RcgConfig &cfg, Rng &fallback_rng)
    {
        EffectiveChannels eff = effective_channels(channels);
        BalanceMatrix R = balance_matrix(eff.Atilde1, eff.Atilde2, lambda);
        ReflectionVector phi0;
        try
        {
            phi0 = design_eigen(R);
        }
        catch (const NumericalError &)
        {
            phi0 = design_random(static_cast<std::size_t>(R.R.rows()), fallback_rng);
        }
        return design_balanced(R, cfg, phi0);
    }

    ReflectionVector design_eigen(const BalanceMatrix &R)
    {
        Eigen::SelfAdjointEigenSolver<cmat> solver(R.R);
        if (solver.info() != Eigen::Success)
            throw NumericalError("design_eigen: eigen-decomposition did not converge");

        // Eigenvalues come sorted ascending
        cvec v = solver.eigenvectors().col(R.R.cols() - 1);
        const double vanish = 1e-14 * v.cwiseAbs().maxCoeff();
        for (auto &z : v)
            if (!(std::abs(z) > vanish))
                z = 1.0;
        return retract_point(v);
    }

    ReflectionVector design_random(std::size_t m, Rng &rng)
    {
        std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
        Eigen::VectorXd phases(static_cast<Eigen::Index>(m));
        for (auto &x : phases)
            x = u(rng);
        return ReflectionVector::from_phases(phases);
    }

} // namespace risbal
