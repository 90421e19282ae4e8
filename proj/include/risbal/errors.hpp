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

#ifndef RISBAL_ERRORS_HPP
#define RISBAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace risbal
{
    // Base for every error raised by the library
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class DimensionError : public Error
    {
    public:
        using Error::Error;
    };

    // Zero entry handed to the retraction; the caller shrinks its step
    class RetractionSingularError : public Error
    {
    public:
        using Error::Error;
    };

    // Non-finite values, failed factorizations, failed eigen-solves
    class NumericalError : public Error
    {
    public:
        using Error::Error;
    };

    class GeometryError : public Error
    {
    public:
        using Error::Error;
    };

    class ConfigError : public Error
    {
    public:
        using Error::Error;
    };

    class EmptyInputError : public Error
    {
    public:
        using Error::Error;
    };

    // Zero Frobenius norm while building the balance matrix (degenerate channel draw)
    class NormalizationError : public Error
    {
    public:
        using Error::Error;
    };

    class HermitianViolationError : public Error
    {
    public:
        using Error::Error;
    };

} // namespace risbal

#endif
