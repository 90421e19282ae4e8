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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "risbal/beamform.hpp"
#include "risbal/errors.hpp"
#include "risbal/metrics.hpp"
#include "risbal/sim.hpp"

#include <cmath>
#include <limits>
#include <sstream>

using namespace risbal;

namespace
{
    ScenarioConfig quick()
    {
        ScenarioConfig sc;
        sc.ris_array = {4, 4, 0.5};
        sc.num_drops = 6;
        return sc;
    }

    std::vector<std::string> lines(const std::string &s)
    {
        std::vector<std::string> out;
        std::istringstream in(s);
        for (std::string l; std::getline(in, l);)
            out.push_back(l);
        return out;
    }
} // namespace

TEST_CASE("run_drop at the reference operating point")
{
    DropResult d = run_drop(ScenarioConfig{}, 12345);
    for (Scheme s : all_schemes)
    {
        CHECK(std::isfinite(d[s].r1));
        CHECK(std::isfinite(d[s].r2));
        CHECK(d[s].r2 > 0.0);
        if (s != Scheme::NoRis)
            CHECK(d[s].r1 > 0.0);
    }
    CHECK(d[Scheme::NoRis].r1 == 0.0);
    CHECK(d == run_drop(ScenarioConfig{}, 12345));
}

TEST_CASE("NoRis rows are the direct links")
{
    ScenarioConfig sc = quick();
    const std::uint64_t seed = 77;
    Rng rng(seed);
    ChannelSet ch = gen_channel_set(sc, rng);
    const double p = dbm_to_watts(sc.p_t_dbm);
    CompositeChannels direct = direct_cell2(ch);
    double expected = evaluate(direct, slnr_beamformer(direct, p, ch.noise_var_2), ch.noise_var_2).sum_rate;
    CHECK(run_drop(sc, seed)[Scheme::NoRis].r2 == expected);

    SUBCASE("RIS fields do not move the NoRis rate")
    {
        ScenarioConfig other = sc;
        other.ris_array = {2, 8, 0.25};
        other.bs_ris_link.rician_factor_db = -3.0;
        other.ris_user_link.path_loss_exponent = 3.1;
        other.theta_rad = 2.0;
        other.lambda_db = 0.0;
        CHECK(run_drop(other, seed)[Scheme::NoRis].r2 == expected);
    }
}

TEST_CASE("lambda = 0 reproduces ConvRis")
{
    ScenarioConfig sc = quick();
    sc.lambda_db = -std::numeric_limits<double>::infinity();
    for (std::uint64_t seed : {1u, 2u, 3u})
    {
        DropResult d = run_drop(sc, seed);
        CHECK(d[Scheme::Proposed] == d[Scheme::ConvRis]);
    }
}

TEST_CASE("run_drops does not depend on the thread count")
{
    ScenarioConfig sc = quick();
    auto one = run_drops(sc, 0, {false, 1});
    auto three = run_drops(sc, 0, {false, 3});
    CHECK(one == three);
    CHECK(one.size() == 6);
    CHECK_FALSE(one[0] == one[1]);
}

TEST_CASE("derive_drop_seed")
{
    CHECK(derive_drop_seed(1, 0, 0) == derive_drop_seed(1, 0, 0));
    CHECK(derive_drop_seed(1, 0, 0) != derive_drop_seed(1, 0, 1));
    CHECK(derive_drop_seed(1, 0, 0) != derive_drop_seed(1, 1, 0));
    CHECK(derive_drop_seed(1, 0, 0) != derive_drop_seed(2, 0, 0));
}

TEST_CASE("run_sweep statistics and ordering")
{
    ScenarioConfig sc = quick();
    sc.num_drops = 1;
    auto single = run_sweep(sc, SweepKind::TransmitPowerDbm, {20.0});
    REQUIRE(single.size() == 8);
    for (const auto &r : single)
    {
        CHECK(r.std_err == 0.0);
        CHECK(r.num_drops == 1);
    }

    sc.num_drops = 4;
    auto rows = run_sweep(sc, SweepKind::LambdaDb, {10.0, 0.0}, {true, 2});
    REQUIRE(rows.size() == 16);
    CHECK(rows.front().sweep_value == 0.0);
    CHECK(rows.back().sweep_value == 10.0);
    for (std::size_t i = 0; i < 8; ++i)
    {
        CHECK(rows[i].scheme == all_schemes[i / 2]);
        CHECK(rows[i].cell == (i % 2 == 0 ? Cell::Cell1 : Cell::Cell2));
    }

    // mean and standard error recomputed from the per-drop results
    auto drops = run_drops(sc, 0, {true, 1});
    double sum = 0.0, sq = 0.0;
    for (const auto &d : drops)
        sum += d[Scheme::RandRis].r2;
    double mean = sum / 4.0;
    for (const auto &d : drops)
        sq += (d[Scheme::RandRis].r2 - mean) * (d[Scheme::RandRis].r2 - mean);
    const SweepResult &rr = rows[5]; // lambda 0, RandRis, cell 2
    CHECK(rr.scheme == Scheme::RandRis);
    CHECK(rr.mean_sum_rate == doctest::Approx(mean).epsilon(1e-14));
    CHECK(rr.std_err == doctest::Approx(std::sqrt(sq / 3.0) / 2.0).epsilon(1e-12));

    // common random numbers: the lambda-independent rows agree across the sweep
    CHECK(rows[7].mean_sum_rate == rows[15].mean_sum_rate);

    CHECK_THROWS_AS(run_sweep(sc, SweepKind::LambdaDb, {}), ConfigError);
}

TEST_CASE("write_csv")
{
    std::vector<SweepResult> rows{{Scheme::ConvRis, 25.0, Cell::Cell2, 12.5, 0.125, 10},
                                  {Scheme::NoRis, 25.0, Cell::Cell1, 0.0, 0.0, 10}};
    std::ostringstream out;
    write_csv(out, SweepKind::TransmitPowerDbm, rows);
    auto l = lines(out.str());
    REQUIRE(l.size() == 3);
    CHECK(l[0] == "scheme,cell,sweep_param,sweep_value,mean_sum_rate_bps_hz,std_err,num_drops");
    CHECK(l[1] == "ConvRis,2,txpower,25,12.5,0.125,10");
    CHECK(l[2] == "NoRis,1,txpower,25,0,0,10");
}

TEST_CASE("names")
{
    CHECK(to_string(Scheme::Proposed) == "Proposed");
    CHECK(to_string(Scheme::RandRis) == "RandRis");
    CHECK(to_string(Cell::Cell2) == "2");
    CHECK(parse_sweep_kind("lambda") == SweepKind::LambdaDb);
    CHECK(parse_sweep_kind("txpower") == SweepKind::TransmitPowerDbm);
    CHECK_FALSE(parse_sweep_kind("power").has_value());
}
