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

#ifndef RISBAL_MANIFOLD_HPP
#define RISBAL_MANIFOLD_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace risbal
{
    using cdouble = std::complex<double>;
    using cvec = Eigen::VectorXcd;
    using cmat = Eigen::MatrixXcd;

    // Point on the complex circle manifold: every entry has modulus one.
    class ReflectionVector
    {
    public:
        static constexpr double modulus_tolerance = 1e-12;

        ReflectionVector() = default;

        // Throws NumericalError if any entry is off the unit circle by more than modulus_tolerance
        explicit ReflectionVector(cvec entries);

        static ReflectionVector ones(std::size_t size);
        static ReflectionVector from_phases(const Eigen::VectorXd &phases);

        const cvec &entries() const noexcept { return entries_; }
        std::size_t size() const noexcept { return static_cast<std::size_t>(entries_.size()); }
        cdouble operator[](std::size_t m) const { return entries_[static_cast<Eigen::Index>(m)]; }

        bool operator==(const ReflectionVector &other) const { return entries_ == other.entries_; }

    private:
        cvec entries_;
    };

    // Vector in the tangent space at `base`, i.e. Re(t_m * conj(base_m)) = 0 for every m
    struct TangentVector
    {
        cvec entries;
        ReflectionVector base;
    };

    // Riemannian metric: real part of the Hermitian inner product, Re(a^H b)
    double real_inner(const cvec &a, const cvec &b);

    // grad = g - Re(g .* conj(phi)) .* phi
    TangentVector project_to_tangent(const cvec &g, const ReflectionVector &phi);

    // Element-wise normalization x_m / |x_m|. Throws RetractionSingularError on a zero entry.
    ReflectionVector retract_point(const cvec &x);

    // Moves a tangent vector into the tangent space at phi_new
    TangentVector transport(const TangentVector &d, const ReflectionVector &phi_new);

    struct RcgConfig
    {
        int max_iters = 5000;
        double grad_tol = 1e-6; // absolute, on the Riemannian gradient norm
        double obj_tol = 1e-10; // relative, on the objective decrease over obj_window steps
        int obj_window = 20;
        double armijo_initial_step = 1.0;
        double armijo_contraction = 0.5;
        double armijo_slope = 1e-4;
        int max_line_search_steps = 50;

        // Defaults with the gradient threshold scaled to 1e-6 * M
        static RcgConfig for_dimension(std::size_t m);

        // Throws ConfigError when a field is out of range
        void validate() const;
    };

    enum class StopReason
    {
        GradNorm,
        ObjDelta,
        MaxIters
    };

    struct RcgTrace
    {
        std::vector<double> objective_values; // f(phi0) followed by one entry per accepted step
        int iterations = 0;
        StopReason converged_by = StopReason::MaxIters;
        double final_grad_norm = 0.0;
        int objective_evaluations = 0;
        int gradient_evaluations = 0;
    };

    struct RcgResult
    {
        ReflectionVector phi;
        RcgTrace trace;
    };

    using Objective = std::function<double(const ReflectionVector &)>;
    using EuclideanGradient = std::function<cvec(const ReflectionVector &)>;

    // Riemannian conjugate gradient on the complex circle manifold.
    // Polak-Ribiere+ direction update, Armijo backtracking along the retraction,
    // and one steepest-descent restart when the line search fails.
    // Throws NumericalError on a non-finite objective or gradient.
    RcgResult rcg_minimize(const Objective &objective,
                           const EuclideanGradient &euclid_grad,
                           const ReflectionVector &phi0,
                           const RcgConfig &cfg);

} // namespace risbal

#endif
