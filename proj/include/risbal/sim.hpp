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

#ifndef RISBAL_SIM_HPP
#define RISBAL_SIM_HPP

#include "risbal/scenario.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace risbal
{
    enum class Scheme
    {
        Proposed, // balanced design at the configured lambda
        ConvRis,  // balanced design at lambda = 0
        RandRis,  // uniform random phases
        NoRis     // cell 2 on its direct links only; cell 1 has no link and reports 0
    };
    inline constexpr std::array<Scheme, 4> all_schemes{Scheme::Proposed, Scheme::ConvRis, Scheme::RandRis,
                                                       Scheme::NoRis};

    enum class Cell
    {
        Cell1,
        Cell2
    };

    enum class SweepKind
    {
        TransmitPowerDbm,
        LambdaDb
    };

    std::string_view to_string(Scheme s);
    std::string_view to_string(Cell c);
    std::string_view to_string(SweepKind k); // "txpower" / "lambda"
    std::optional<SweepKind> parse_sweep_kind(std::string_view name);

    // Sum-rates [bit/s/Hz] of both cells for one scheme
    struct CellRates
    {
        double r1 = 0.0;
        double r2 = 0.0;

        bool operator==(const CellRates &) const = default;
    };

    struct DropResult
    {
        std::array<CellRates, 4> rates; // indexed by Scheme

        const CellRates &operator[](Scheme s) const { return rates[static_cast<std::size_t>(s)]; }
        CellRates &operator[](Scheme s) { return rates[static_cast<std::size_t>(s)]; }
        bool operator==(const DropResult &) const = default;
    };

    // One channel realization evaluated under all four schemes.
    // BS 2 always precodes on the direct links alone.
    DropResult run_drop(const ScenarioConfig &cfg, std::uint64_t drop_seed);

    struct SweepResult
    {
        Scheme scheme = Scheme::Proposed;
        double sweep_value = 0.0;
        Cell cell = Cell::Cell1;
        double mean_sum_rate = 0.0; // [bit/s/Hz]
        double std_err = 0.0;       // standard error of the mean
        int num_drops = 0;
    };

    struct SweepOptions
    {
        bool common_random_numbers = false; // reuse the same drop seeds at every sweep value
        unsigned threads = 0;               // 0 = hardware concurrency
    };

    // Seed of drop `drop_index` at sweep position `sweep_index` (splitmix64 mixing)
    std::uint64_t derive_drop_seed(std::uint64_t master_seed, std::uint64_t sweep_index, std::uint64_t drop_index);

    // Per-drop results for one configuration, ordered by drop index
    std::vector<DropResult> run_drops(const ScenarioConfig &cfg, std::uint64_t sweep_index, const SweepOptions &opts);

    // Rows sorted by (sweep_value, scheme, cell). Throws ConfigError on an empty value list.
    std::vector<SweepResult> run_sweep(const ScenarioConfig &cfg, SweepKind sweep, const std::vector<double> &values,
                                       const SweepOptions &opts = {});

    // Header: scheme,cell,sweep_param,sweep_value,mean_sum_rate_bps_hz,std_err,num_drops
    void write_csv(std::ostream &out, SweepKind sweep, const std::vector<SweepResult> &results);

    // Worker cap from RISBAL_THREADS (unset or 0 = auto)
    unsigned threads_from_env();

} // namespace risbal

#endif
