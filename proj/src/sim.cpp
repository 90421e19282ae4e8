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

#include "risbal/sim.hpp"
#include "risbal/beamform.hpp"
#include "risbal/errors.hpp"
#include "risbal/metrics.hpp"
#include "risbal/ris_design.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <ostream>
#include <thread>

namespace risbal
{
    namespace
    {
        std::uint64_t splitmix64(std::uint64_t x)
        {
            x += 0x9e3779b97f4a7c15ULL;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
            return x ^ (x >> 31);
        }

        // Stream tags so that the channel draw never shares randomness with the designs
        constexpr std::uint64_t design_stream = 0x52495342414c0001ULL;
        constexpr std::uint64_t random_phase_stream = 0x52495342414c0002ULL;

        double cell1_rate(const ReflectionVector &phi, const ChannelSet &ch, double p_t)
        {
            CompositeChannels rows = composite_cell1(phi, ch);
            Beamformer f1 = slnr_beamformer(rows, p_t, ch.noise_var_1);
            return evaluate(rows, f1, ch.noise_var_1).sum_rate;
        }

        double cell2_rate(const ReflectionVector &phi, const ChannelSet &ch, const Beamformer &f2)
        {
            return evaluate(composite_cell2(phi, ch), f2, ch.noise_var_2).sum_rate;
        }

        ReflectionVector balanced_phi(const ChannelSet &ch, double lambda, std::uint64_t drop_seed)
        {
            Rng fallback(splitmix64(drop_seed ^ design_stream));
            RcgConfig rcg = RcgConfig::for_dimension(static_cast<std::size_t>(ch.G1.rows()));
            return design_balanced(ch, lambda, rcg, fallback).phi;
        }

        struct Accumulator
        {
            double sum = 0.0;
            double sum_sq_dev = 0.0;
        };
    } // namespace

    std::string_view to_string(Scheme s)
    {
        switch (s)
        {
        case Scheme::Proposed:
            return "Proposed";
        case Scheme::ConvRis:
            return "ConvRis";
        case Scheme::RandRis:
            return "RandRis";
        case Scheme::NoRis:
            return "NoRis";
        }
        return "?";
    }

    std::string_view to_string(Cell c) { return c == Cell::Cell1 ? "1" : "2"; }

    std::string_view to_string(SweepKind k) { return k == SweepKind::TransmitPowerDbm ? "txpower" : "lambda"; }

    std::optional<SweepKind> parse_sweep_kind(std::string_view name)
    {
        if (name == "txpower")
            return SweepKind::TransmitPowerDbm;
        if (name == "lambda")
            return SweepKind::LambdaDb;
        return std::nullopt;
    }

    DropResult run_drop(const ScenarioConfig &cfg, std::uint64_t drop_seed)
    {
        Rng channel_rng(drop_seed);
        const ChannelSet ch = gen_channel_set(cfg, channel_rng);
        const double p_t = dbm_to_watts(cfg.p_t_dbm);
        const double lambda = db_to_linear(cfg.lambda_db);

        const Beamformer f2 = slnr_beamformer(direct_cell2(ch), p_t, ch.noise_var_2);

        DropResult out;
        const ReflectionVector proposed = balanced_phi(ch, lambda, drop_seed);
        const ReflectionVector conventional = balanced_phi(ch, 0.0, drop_seed);
        Rng phase_rng(splitmix64(drop_seed ^ random_phase_stream));
        const ReflectionVector random = design_random(static_cast<std::size_t>(ch.G1.rows()), phase_rng);

        out[Scheme::Proposed] = {cell1_rate(proposed, ch, p_t), cell2_rate(proposed, ch, f2)};
        out[Scheme::ConvRis] = {cell1_rate(conventional, ch, p_t), cell2_rate(conventional, ch, f2)};
        out[Scheme::RandRis] = {cell1_rate(random, ch, p_t), cell2_rate(random, ch, f2)};
        out[Scheme::NoRis] = {0.0, evaluate(direct_cell2(ch), f2, ch.noise_var_2).sum_rate};
        return out;
    }

    std::uint64_t derive_drop_seed(std::uint64_t master_seed, std::uint64_t sweep_index, std::uint64_t drop_index)
    {
        std::uint64_t h = splitmix64(master_seed);
        h = splitmix64(h ^ sweep_index);
        return splitmix64(h ^ (drop_index * 0xd1b54a32d192ed03ULL));
    }

    std::vector<DropResult> run_drops(const ScenarioConfig &cfg, std::uint64_t sweep_index, const SweepOptions &opts)
    {
        cfg.validate();
        const auto drops = static_cast<std::size_t>(cfg.num_drops);
        std::vector<DropResult> results(drops);
        std::vector<std::exception_ptr> errors(drops);

        unsigned workers = opts.threads != 0 ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
        workers = static_cast<unsigned>(std::min<std::size_t>(workers, drops));

        std::atomic<std::size_t> next{0};
        auto work = [&]
        {
            for (std::size_t d = next++; d < drops; d = next++)
            {
                try
                {
                    results[d] = run_drop(cfg, derive_drop_seed(cfg.seed, sweep_index, d));
                }
                catch (...)
                {
                    errors[d] = std::current_exception();
                }
            }
        };

        if (workers <= 1)
            work();
        else
        {
            std::vector<std::jthread> pool;
            pool.reserve(workers);
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back(work);
        }

        for (const auto &e : errors)
            if (e)
                std::rethrow_exception(e);
        return results;
    }

    std::vector<SweepResult> run_sweep(const ScenarioConfig &cfg, SweepKind sweep, const std::vector<double> &values,
                                       const SweepOptions &opts)
    {
        if (values.empty())
            throw ConfigError("run_sweep: no sweep values given");

        std::vector<SweepResult> out;
        for (std::size_t v = 0; v < values.size(); ++v)
        {
            ScenarioConfig point = cfg;
            if (sweep == SweepKind::TransmitPowerDbm)
                point.p_t_dbm = values[v];
            else
                point.lambda_db = values[v];

            const std::uint64_t sweep_index = opts.common_random_numbers ? 0 : v;
            const std::vector<DropResult> drops = run_drops(point, sweep_index, opts);
            const double n = static_cast<double>(drops.size());

            for (Scheme s : all_schemes)
            {
                for (Cell c : {Cell::Cell1, Cell::Cell2})
                {
                    auto pick = [&](const DropResult &d) { return c == Cell::Cell1 ? d[s].r1 : d[s].r2; };
                    Accumulator acc;
                    for (const auto &d : drops)
                        acc.sum += pick(d);
                    const double mean = acc.sum / n;
                    for (const auto &d : drops)
                        acc.sum_sq_dev += (pick(d) - mean) * (pick(d) - mean);
                    const double std_err = drops.size() > 1 ? std::sqrt(acc.sum_sq_dev / (n - 1.0)) / std::sqrt(n) : 0.0;
                    out.push_back({s, values[v], c, mean, std_err, static_cast<int>(drops.size())});
                }
            }
        }

        std::stable_sort(out.begin(), out.end(),
                         [](const SweepResult &a, const SweepResult &b)
                         {
                             if (a.sweep_value != b.sweep_value)
                                 return a.sweep_value < b.sweep_value;
                             if (a.scheme != b.scheme)
                                 return a.scheme < b.scheme;
                             return a.cell < b.cell;
                         });
        return out;
    }

    void write_csv(std::ostream &out, SweepKind sweep, const std::vector<SweepResult> &results)
    {
        out << "scheme,cell,sweep_param,sweep_value,mean_sum_rate_bps_hz,std_err,num_drops\n";
        char buf[256];
        for (const auto &r : results)
        {
            std::snprintf(buf, sizeof buf, "%s,%s,%s,%.9g,%.9g,%.9g,%d\n", to_string(r.scheme).data(),
                          to_string(r.cell).data(), to_string(sweep).data(), r.sweep_value, r.mean_sum_rate,
                          r.std_err, r.num_drops);
            out << buf;
        }
    }

    unsigned threads_from_env()
    {
        const char *v = std::getenv("RISBAL_THREADS");
        if (v == nullptr || *v == '\0')
            return 0;
        char *end = nullptr;
        unsigned long n = std::strtoul(v, &end, 10);
        if (*end != '\0')
            throw ConfigError(std::string("RISBAL_THREADS must be a nonnegative integer, got '") + v + "'");
        return static_cast<unsigned>(n);
    }

} // namespace risbal
