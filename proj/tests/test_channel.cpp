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

#include "risbal/channel.hpp"
#include "risbal/errors.hpp"
#include "risbal/scenario.hpp"
#include "test_util.hpp"

#include <cstring>

using namespace risbal;

namespace
{
    bool bit_identical(const cvec &a, const cvec &b)
    {
        return a.size() == b.size() &&
               std::memcmp(a.data(), b.data(), static_cast<std::size_t>(a.size()) * sizeof(cdouble)) == 0;
    }

    bool bit_identical(const cmat &a, const cmat &b)
    {
        return a.rows() == b.rows() && a.cols() == b.cols() &&
               std::memcmp(a.data(), b.data(), static_cast<std::size_t>(a.size()) * sizeof(cdouble)) == 0;
    }

    bool bit_identical(const std::vector<cvec> &a, const std::vector<cvec> &b)
    {
        if (a.size() != b.size())
            return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!bit_identical(a[i], b[i]))
                return false;
        return true;
    }
} // namespace

TEST_CASE("los_angles")
{
    LosAngles a = los_angles({0, 0, 0}, {1, 0, 0});
    CHECK(a.azimuth == 0.0);
    CHECK(a.elevation == 0.0);

    LosAngles up = los_angles({0, 0, 0}, {0, 0, 1});
    CHECK(up.azimuth == 0.0);
    CHECK(up.elevation == doctest::Approx(std::numbers::pi / 2));

    // atan2(40, 30) and atan2(-14, 50), evaluated by hand
    LosAngles b = los_angles({0, 0, 15}, {30, 40, 1});
    CHECK(b.azimuth == doctest::Approx(0.927295218).epsilon(1e-9));
    CHECK(b.elevation == doctest::Approx(-0.273008703).epsilon(1e-9));

    CHECK_THROWS_AS(los_angles({1, 2, 3}, {1, 2, 3}), GeometryError);
}

TEST_CASE("upa_steering")
{
    CHECK(upa_steering(0.0, 0.0, {4, 4, 0.5}).isApprox(cvec::Ones(16)));
    cvec single = upa_steering(1.1, -0.3, {1, 1, 0.5});
    REQUIRE(single.size() == 1);
    CHECK(std::abs(single[0] - cdouble(1.0, 0.0)) < 1e-15);

    SUBCASE("2x2 at az = pi/2, el = 0 against scalar evaluation")
    {
        // horizontal phase pi * q, vertical phase 0: [1, -1, 1, -1] row-major over (p, q)
        cvec a = upa_steering(std::numbers::pi / 2, 0.0, {2, 2, 0.5});
        cvec expected(4);
        expected << 1.0, -1.0, 1.0, -1.0;
        CHECK((a - expected).cwiseAbs().maxCoeff() < 1e-12);
    }

    SUBCASE("unit modulus everywhere")
    {
        Rng rng(3);
        std::uniform_real_distribution<double> ang(-3.2, 3.2);
        for (int t = 0; t < 50; ++t)
        {
            cvec a = upa_steering(ang(rng), ang(rng), {8, 16, 0.5});
            CHECK((a.cwiseAbs().array() - 1.0).abs().maxCoeff() < 1e-12);
        }
    }

    CHECK_THROWS_AS(upa_steering(0, 0, {0, 4, 0.5}), ConfigError);
}

TEST_CASE("path_loss_linear")
{
    CHECK(path_loss_linear(1.0, 3.0, -30.0, 1.0).gain == doctest::Approx(1e-3));
    CHECK(path_loss_linear(10.0, 2.0, 0.0, 1.0).gain == doctest::Approx(0.01));
    // 1e-3 * 50^-2.4
    CHECK(path_loss_linear(50.0, 2.4, -30.0, 1.0).gain == doctest::Approx(8.365116e-8).epsilon(1e-6));

    PathLoss near = path_loss_linear(0.5, 2.0, -30.0, 1.0);
    CHECK(near.clamped);
    CHECK(near.gain == doctest::Approx(1e-3));
    CHECK_FALSE(path_loss_linear(2.0, 2.0, -30.0, 1.0).clamped);

    double prev = path_loss_linear(1.0, 2.5, -30.0, 1.0).gain;
    for (double d = 1.5; d < 200.0; d *= 1.5)
    {
        double g = path_loss_linear(d, 2.5, -30.0, 1.0).gain;
        CHECK(g < prev);
        prev = g;
    }
}

TEST_CASE("gen_rician_matrix")
{
    Rng rng(21);
    LinkEnd tx{{2, 2, 0.5}, {0.3, 0.1}};
    LinkEnd rx{{2, 3, 0.5}, {-0.7, 0.2}};

    SUBCASE("LoS-only limit at 80 dB")
    {
        RicianLinkParams p{2.0, 80.0, 8, 10.0};
        cmat h = gen_rician_matrix(tx, rx, p, 4.0, rng);
        cmat los = upa_steering(rx.los.azimuth, rx.los.elevation, rx.array) *
                   upa_steering(tx.los.azimuth, tx.los.elevation, tx.array).adjoint();
        CHECK((h / 2.0 - los).norm() < 1e-3);
    }

    SUBCASE("scalar link without NLoS paths")
    {
        LinkEnd a{{1, 1, 0.5}, {0.4, 0.0}};
        LinkEnd b{{1, 1, 0.5}, {-1.0, 0.5}};
        cmat h = gen_rician_matrix(a, b, {2.0, 5.0, 0, 10.0}, 3e-7, rng);
        REQUIRE(h.size() == 1);
        CHECK(std::norm(h(0, 0)) == doctest::Approx(3e-7).epsilon(1e-12));
    }

    SUBCASE("Monte Carlo power normalization and LoS share")
    {
        RicianLinkParams p{2.0, 5.0, 4, 10.0};
        const double kappa = std::pow(10.0, 0.5);
        const double pl = 2.5;
        const int draws = 10000;
        cmat los = upa_steering(rx.los.azimuth, rx.los.elevation, rx.array) *
                   upa_steering(tx.los.azimuth, tx.los.elevation, tx.array).adjoint();
        los *= std::sqrt(pl * kappa / (kappa + 1.0));
        double total = 0.0;
        double nlos = 0.0;
        for (int i = 0; i < draws; ++i)
        {
            cmat h = gen_rician_matrix(tx, rx, p, pl, rng);
            total += h.squaredNorm();
            nlos += (h - los).squaredNorm();
        }
        const double expected = pl * 6.0 * 4.0;
        CHECK(std::abs(total / draws - expected) < 0.03 * expected);
        double los_fraction = 1.0 - nlos / total;
        CHECK(std::abs(los_fraction - kappa / (kappa + 1.0)) < 0.03 * kappa / (kappa + 1.0));
    }
}

TEST_CASE("gen_channel_set")
{
    ScenarioConfig sc;

    SUBCASE("dimensions at the reference operating point")
    {
        Rng rng(5);
        ChannelSet ch = gen_channel_set(sc, rng);
        CHECK(ch.G1.rows() == 128);
        CHECK(ch.G1.cols() == 16);
        CHECK(ch.G2.rows() == 128);
        CHECK(ch.G2.cols() == 16);
        REQUIRE(ch.h_r1.size() == 4);
        REQUIRE(ch.h_r2.size() == 4);
        REQUIRE(ch.h_d2.size() == 4);
        CHECK(ch.h_r1[0].size() == 128);
        CHECK(ch.h_d2[3].size() == 16);
        CHECK(ch.noise_var_1 == doctest::Approx(3.98107e-14).epsilon(1e-5));
        CHECK(ch.noise_var_2 == ch.noise_var_1);
        CHECK(ch.theta == doctest::Approx(std::numbers::pi / 6));
        CHECK(ch.G1.allFinite());
        CHECK(ch.G2.allFinite());
    }

    SUBCASE("same seed gives bit-identical realizations")
    {
        Rng a(99), b(99), c(100);
        ChannelSet x = gen_channel_set(sc, a);
        ChannelSet y = gen_channel_set(sc, b);
        ChannelSet z = gen_channel_set(sc, c);
        CHECK(bit_identical(x.G1, y.G1));
        CHECK(bit_identical(x.G2, y.G2));
        CHECK(bit_identical(x.h_r1, y.h_r1));
        CHECK(bit_identical(x.h_r2, y.h_r2));
        CHECK(bit_identical(x.h_d2, y.h_d2));
        CHECK_FALSE(bit_identical(x.G1, z.G1));
    }

    SUBCASE("invalid scenario")
    {
        Rng rng(1);
        sc.users_per_cell = 0;
        CHECK_THROWS_AS(gen_channel_set(sc, rng), ConfigError);
    }
}
