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

#include "risbal/manifold.hpp"
#include "risbal/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace risbal
{
    namespace
    {
        void require_same_size(Eigen::Index a, Eigen::Index b, const char *what)
        {
            if (a != b)
                throw DimensionError(std::string(what) + ": size mismatch (" + std::to_string(a) +
                                     " vs " + std::to_string(b) + ")");
        }

        bool all_finite(const cvec &v)
        {
            for (const auto &z : v)
                if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                    return false;
            return true;
        }

        // Projection kernel shared by the Riemannian gradient and the vector transport
        cvec tangent_component(const cvec &v, const cvec &phi)
        {
            cvec out(v.size());
            for (Eigen::Index m = 0; m < v.size(); ++m)
                out[m] = v[m] - (v[m] * std::conj(phi[m])).real() * phi[m];
            return out;
        }
    } // namespace

    ReflectionVector::ReflectionVector(cvec entries) : entries_(std::move(entries))
    {
        for (Eigen::Index m = 0; m < entries_.size(); ++m)
        {
            double err = std::abs(std::abs(entries_[m]) - 1.0);
            if (!(err <= modulus_tolerance))
                throw NumericalError("ReflectionVector: entry " + std::to_string(m) +
                                     " is not unit-modulus (|x| - 1 = " + std::to_string(err) + ")");
        }
    }

    ReflectionVector ReflectionVector::ones(std::size_t size)
    {
        return ReflectionVector(cvec::Ones(static_cast<Eigen::Index>(size)));
    }

    ReflectionVector ReflectionVector::from_phases(const Eigen::VectorXd &phases)
    {
        cvec v(phases.size());
        for (Eigen::Index m = 0; m < phases.size(); ++m)
            v[m] = std::polar(1.0, phases[m]);
        return ReflectionVector(std::move(v));
    }

    double real_inner(const cvec &a, const cvec &b)
    {
        require_same_size(a.size(), b.size(), "real_inner");
        return a.dot(b).real(); // Eigen's dot conjugates the left operand
    }

    TangentVector project_to_tangent(const cvec &g, const ReflectionVector &phi)
    {
        require_same_size(g.size(), phi.entries().size(), "project_to_tangent");
        return {tangent_component(g, phi.entries()), phi};
    }

    ReflectionVector retract_point(const cvec &x)
    {
        cvec out(x.size());
        for (Eigen::Index m = 0; m < x.size(); ++m)
        {
            double r = std::abs(x[m]);
            if (r == 0.0)
                throw RetractionSingularError("retract_point: entry " + std::to_string(m) + " is zero");
            out[m] = x[m] / r;
        }
        return ReflectionVector(std::move(out));
    }

    TangentVector transport(const TangentVector &d, const ReflectionVector &phi_new)
    {
        require_same_size(d.entries.size(), phi_new.entries().size(), "transport");
        return {tangent_component(d.entries, phi_new.entries()), phi_new};
    }

    RcgConfig RcgConfig::for_dimension(std::size_t m)
    {
        RcgConfig cfg;
        cfg.grad_tol = 1e-6 * static_cast<double>(m);
        return cfg;
    }

    void RcgConfig::validate() const
    {
        if (max_iters <= 0)
            throw ConfigError("RcgConfig: max_iters must be positive");
        if (!(grad_tol >= 0.0) || !(obj_tol >= 0.0))
            throw ConfigError("RcgConfig: tolerances must be nonnegative");
        if (!(armijo_initial_step > 0.0))
            throw ConfigError("RcgConfig: armijo_initial_step must be positive");
        if (!(armijo_contraction > 0.0 && armijo_contraction < 1.0))
            throw ConfigError("RcgConfig: armijo_contraction must lie in (0,1)");
        if (!(armijo_slope > 0.0 && armijo_slope < 1.0))
            throw ConfigError("RcgConfig: armijo_slope must lie in (0,1)");
        if (obj_window <= 0)
            throw ConfigError("RcgConfig: obj_window must be positive");
        if (max_line_search_steps <= 0)
            throw ConfigError("RcgConfig: max_line_search_steps must be positive");
    }

    RcgResult rcg_minimize(const Objective &objective,
                           const EuclideanGradient &euclid_grad,
                           const ReflectionVector &phi0,
                           const RcgConfig &cfg)
    {
        cfg.validate();
        RcgTrace trace;

        auto eval_f = [&](const ReflectionVector &p)
        {
            ++trace.objective_evaluations;
            double v = objective(p);
            if (!std::isfinite(v))
                throw NumericalError("rcg_minimize: objective is not finite");
            return v;
        };
        auto eval_grad = [&](const ReflectionVector &p)
        {
            ++trace.gradient_evaluations;
            cvec eg = euclid_grad(p);
            require_same_size(eg.size(), p.entries().size(), "rcg_minimize gradient");
            if (!all_finite(eg))
                throw NumericalError("rcg_minimize: Euclidean gradient is not finite");
            return project_to_tangent(eg, p);
        };

        ReflectionVector phi = phi0;
        double f = eval_f(phi);
        TangentVector grad = eval_grad(phi);
        double grad_sq = real_inner(grad.entries, grad.entries);
        trace.objective_values.push_back(f);

        TangentVector dir{-grad.entries, phi};

        // Armijo backtracking along the retraction curve. Returns false when no
        // admissible step was found within max_line_search_steps contractions.
        auto line_search = [&](const cvec &d, double slope, ReflectionVector &phi_out, double &f_out)
        {
            double alpha = cfg.armijo_initial_step;
            for (int step = 0; step < cfg.max_line_search_steps; ++step, alpha *= cfg.armijo_contraction)
            {
                ReflectionVector candidate;
                try
                {
                    candidate = retract_point(phi.entries() + alpha * d);
                }
                catch (const RetractionSingularError &)
                {
                    continue;
                }
                double f_candidate = eval_f(candidate);
                if (f_candidate <= f + cfg.armijo_slope * alpha * slope)
                {
                    phi_out = std::move(candidate);
                    f_out = f_candidate;
                    return true;
                }
            }
            return false;
        };

        if (grad_sq == 0.0 || std::sqrt(grad_sq) < cfg.grad_tol)
        {
            trace.converged_by = StopReason::GradNorm;
            trace.final_grad_norm = std::sqrt(grad_sq);
            return {phi, trace};
        }

        trace.converged_by = StopReason::MaxIters;
        while (trace.iterations < cfg.max_iters)
        {
            double slope = real_inner(grad.entries, dir.entries);
            bool steepest = false;
            if (!(slope < 0.0))
            {
                dir.entries = -grad.entries;
                slope = -grad_sq;
                steepest = true;
            }

            ReflectionVector phi_next;
            double f_next = f;
            bool accepted = line_search(dir.entries, slope, phi_next, f_next);
            if (!accepted && !steepest)
            {
                dir.entries = -grad.entries;
                accepted = line_search(dir.entries, -grad_sq, phi_next, f_next);
            }
            if (!accepted)
            {
                trace.converged_by = StopReason::ObjDelta;
                break;
            }

            TangentVector grad_next = eval_grad(phi_next);
            double grad_next_sq = real_inner(grad_next.entries, grad_next.entries);

            ++trace.iterations;
            trace.objective_values.push_back(f_next);

            // Polak-Ribiere+ with both previous vectors carried to the new tangent space
            TangentVector grad_moved = transport(grad, phi_next);
            TangentVector dir_moved = transport(dir, phi_next);
            double beta = real_inner(grad_next.entries, grad_next.entries - grad_moved.entries) / grad_sq;
            beta = std::max(0.0, beta);

            phi = std::move(phi_next);
            f = f_next;
            grad = std::move(grad_next);
            grad_sq = grad_next_sq;
            dir = TangentVector{-grad.entries + beta * dir_moved.entries, phi};

            if (grad_sq == 0.0 || std::sqrt(grad_sq) < cfg.grad_tol)
            {
                trace.converged_by = StopReason::GradNorm;
                break;
            }
            // relative decrease accumulated over the last obj_window accepted steps
            const auto &values = trace.objective_values;
            const std::size_t window = static_cast<std::size_t>(cfg.obj_window);
            if (values.size() > window &&
                values[values.size() - 1 - window] - f < cfg.obj_tol * std::max(std::abs(values[values.size() - 1 - window]),
                                                                                 std::numeric_limits<double>::min()))
            {
                trace.converged_by = StopReason::ObjDelta;
                break;
            }
        }

        trace.final_grad_norm = std::sqrt(grad_sq);
        return {phi, trace};
    }

} // namespace risbal
