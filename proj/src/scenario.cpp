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

#include "risbal/scenario.hpp"
#include "risbal/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <vector>

namespace risbal
{
    namespace
    {
        std::string trim(std::string_view s)
        {
            auto b = s.find_first_not_of(" \t\r");
            if (b == std::string_view::npos)
                return {};
            auto e = s.find_last_not_of(" \t\r");
            return std::string(s.substr(b, e - b + 1));
        }

        double parse_double(const std::string &key, const std::string &v)
        {
            double out = 0.0;
            auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
            const bool lambda_off = key == "lambda_db" && out == -std::numeric_limits<double>::infinity();
            if (ec != std::errc() || ptr != v.data() + v.size() || !(std::isfinite(out) || lambda_off))
                throw ConfigError("config key '" + key + "': expected a real number, got '" + v + "'");
            return out;
        }

        long long parse_integer(const std::string &key, const std::string &v)
        {
            long long out = 0;
            auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
            if (ec != std::errc() || ptr != v.data() + v.size())
                throw ConfigError("config key '" + key + "': expected an integer, got '" + v + "'");
            return out;
        }

        std::uint64_t parse_unsigned(const std::string &key, const std::string &v)
        {
            std::uint64_t out = 0;
            auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
            if (ec != std::errc() || ptr != v.data() + v.size())
                throw ConfigError("config key '" + key + "': expected an unsigned integer, got '" + v + "'");
            return out;
        }

        int parse_int(const std::string &key, const std::string &v)
        {
            long long x = parse_integer(key, v);
            if (x < INT32_MIN || x > INT32_MAX)
                throw ConfigError("config key '" + key + "': value out of range");
            return static_cast<int>(x);
        }

        Position3D parse_position(const std::string &key, const std::string &v)
        {
            std::vector<double> parts;
            std::stringstream ss(v);
            std::string item;
            while (std::getline(ss, item, ','))
                parts.push_back(parse_double(key, trim(item)));
            if (parts.size() != 3)
                throw ConfigError("config key '" + key + "': expected 'x, y, z'");
            return {parts[0], parts[1], parts[2]};
        }

        std::string fmt(double v)
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            return buf;
        }

        struct Field
        {
            std::string key;
            std::function<void(ScenarioConfig &, const std::string &)> set;
            std::function<std::string(const ScenarioConfig &)> get;
        };

        template <typename Member>
        Field real_field(std::string key, Member member)
        {
            return {key,
                    [key, member](ScenarioConfig &c, const std::string &v) { std::invoke(member, c) = parse_double(key, v); },
                    [member](const ScenarioConfig &c) { return fmt(std::invoke(member, c)); }};
        }

        template <typename Member>
        Field int_field(std::string key, Member member)
        {
            return {key,
                    [key, member](ScenarioConfig &c, const std::string &v) { std::invoke(member, c) = parse_int(key, v); },
                    [member](const ScenarioConfig &c) { return std::to_string(std::invoke(member, c)); }};
        }

        Field position_field(std::string key, Position3D ScenarioConfig::*member)
        {
            return {key,
                    [key, member](ScenarioConfig &c, const std::string &v) { c.*member = parse_position(key, v); },
                    [member](const ScenarioConfig &c)
                    {
                        const Position3D &p = c.*member;
                        return fmt(p.x) + ", " + fmt(p.y) + ", " + fmt(p.z);
                    }};
        }

        void add_array(std::vector<Field> &fields, const std::string &name, ArrayGeometry ScenarioConfig::*arr)
        {
            fields.push_back(int_field(name + ".vertical_count",
                                       [arr](auto &c) -> auto & { return (c.*arr).vertical_count; }));
            fields.push_back(int_field(name + ".horizontal_count",
                                       [arr](auto &c) -> auto & { return (c.*arr).horizontal_count; }));
            fields.push_back(real_field(name + ".element_spacing",
                                        [arr](auto &c) -> auto & { return (c.*arr).element_spacing; }));
        }

        void add_link(std::vector<Field> &fields, const std::string &name, RicianLinkParams ScenarioConfig::*link)
        {
            fields.push_back(real_field(name + ".path_loss_exponent",
                                        [link](auto &c) -> auto & { return (c.*link).path_loss_exponent; }));
            fields.push_back(real_field(name + ".rician_factor_db",
                                        [link](auto &c) -> auto & { return (c.*link).rician_factor_db; }));
            fields.push_back(int_field(name + ".nlos_path_count",
                                       [link](auto &c) -> auto & { return (c.*link).nlos_path_count; }));
            fields.push_back(real_field(name + ".angular_spread_deg",
                                        [link](auto &c) -> auto & { return (c.*link).angular_spread_deg; }));
        }

        const std::vector<Field> &fields()
        {
            static const std::vector<Field> table = []
            {
                std::vector<Field> f;
                add_array(f, "bs1_array", &ScenarioConfig::bs1_array);
                add_array(f, "bs2_array", &ScenarioConfig::bs2_array);
                add_array(f, "ris_array", &ScenarioConfig::ris_array);
                f.push_back(position_field("bs1_position", &ScenarioConfig::bs1_position));
                f.push_back(position_field("bs2_position", &ScenarioConfig::bs2_position));
                f.push_back(position_field("ris_position", &ScenarioConfig::ris_position));
                f.push_back(position_field("cell1_center", &ScenarioConfig::cell1_center));
                f.push_back(real_field("cell1_radius", &ScenarioConfig::cell1_radius));
                f.push_back(position_field("cell2_center", &ScenarioConfig::cell2_center));
                f.push_back(real_field("cell2_radius", &ScenarioConfig::cell2_radius));
                f.push_back(int_field("users_per_cell", &ScenarioConfig::users_per_cell));
                add_link(f, "direct_link", &ScenarioConfig::direct_link);
                add_link(f, "ris_user_link", &ScenarioConfig::ris_user_link);
                add_link(f, "bs_ris_link", &ScenarioConfig::bs_ris_link);
                f.push_back(real_field("pathloss_c0_db", &ScenarioConfig::pathloss_c0_db));
                f.push_back(real_field("pathloss_d0_m", &ScenarioConfig::pathloss_d0_m));
                f.push_back(real_field("p_t_dbm", &ScenarioConfig::p_t_dbm));
                f.push_back(real_field("noise_dbm", &ScenarioConfig::noise_dbm));
                f.push_back(real_field("theta_rad", &ScenarioConfig::theta_rad));
                f.push_back(real_field("lambda_db", &ScenarioConfig::lambda_db));
                f.push_back(int_field("num_drops", &ScenarioConfig::num_drops));
                f.push_back({"seed",
                             [](ScenarioConfig &c, const std::string &v) { c.seed = parse_unsigned("seed", v); },
                             [](const ScenarioConfig &c) { return std::to_string(c.seed); }});
                return f;
            }();
            return table;
        }

        void check_position(const Position3D &p, const char *name)
        {
            if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z) || p.z < 0.0)
                throw ConfigError(std::string("ScenarioConfig: ") + name + " must be finite with z >= 0");
        }
    } // namespace

    void ScenarioConfig::validate() const
    {
        bs1_array.validate();
        bs2_array.validate();
        ris_array.validate();
        direct_link.validate();
        ris_user_link.validate();
        bs_ris_link.validate();
        check_position(bs1_position, "bs1_position");
        check_position(bs2_position, "bs2_position");
        check_position(ris_position, "ris_position");
        check_position(cell1_center, "cell1_center");
        check_position(cell2_center, "cell2_center");
        if (!(cell1_radius >= 0.0) || !(cell2_radius >= 0.0))
            throw ConfigError("ScenarioConfig: serving-area radii must be nonnegative");
        if (users_per_cell < 1)
            throw ConfigError("ScenarioConfig: users_per_cell must be at least 1");
        if (num_drops < 1)
            throw ConfigError("ScenarioConfig: num_drops must be at least 1");
        if (!(pathloss_d0_m > 0.0))
            throw ConfigError("ScenarioConfig: pathloss_d0_m must be positive");
        for (double v : {pathloss_c0_db, p_t_dbm, noise_dbm, theta_rad})
            if (!std::isfinite(v))
                throw ConfigError("ScenarioConfig: power, noise and theta must be finite");
        // -inf dB is a valid lambda: it turns the leakage penalty off
        if (std::isnan(lambda_db) || lambda_db == std::numeric_limits<double>::infinity())
            throw ConfigError("ScenarioConfig: lambda_db must be a number below +inf");
    }

    ScenarioConfig parse_scenario(const std::string &text, ScenarioConfig base)
    {
        std::set<std::string> seen;
        std::istringstream in(text);
        std::string raw;
        int line_no = 0;
        while (std::getline(in, raw))
        {
            ++line_no;
            std::string line = trim(raw.substr(0, raw.find('#')));
            if (line.empty())
                continue;
            auto eq = line.find('=');
            if (eq == std::string::npos)
                throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
            std::string key = trim(line.substr(0, eq));
            std::string value = trim(line.substr(eq + 1));

            const Field *field = nullptr;
            for (const auto &f : fields())
                if (f.key == key)
                    field = &f;
            if (field == nullptr)
                throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
            if (!seen.insert(key).second)
                throw ConfigError("config line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
            field->set(base, value);
        }
        base.validate();
        return base;
    }

    ScenarioConfig load_scenario_file(const std::string &path)
    {
        std::ifstream file(path, std::ios::binary);
        if (!file)
            throw ConfigError("cannot read config file '" + path + "'");
        std::stringstream buffer;
        buffer << file.rdbuf();
        return parse_scenario(buffer.str());
    }

    std::string format_scenario(const ScenarioConfig &cfg)
    {
        std::string out;
        for (const auto &f : fields())
            out += f.key + " = " + f.get(cfg) + "\n";
        return out;
    }

} // namespace risbal
