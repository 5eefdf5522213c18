// SPDX-License-Identifier: Apache-2.0
//
// uavcov: coverage and backhaul analysis for urban UAV networks
// Copyright (C) 2026 The uavcov Authors
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

#include <uavcov/config.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace uavcov
{

namespace
{

constexpr std::array kSchema{
    ConfigKey{"beta_per_km2", Unit::PerKm2, 300.0},
    ConfigKey{"delta", Unit::Dimensionless, 0.5},
    ConfigKey{"kappa_m", Unit::Metre, 20.0},
    ConfigKey{"lambda_per_km2", Unit::PerKm2, 25.0},
    ConfigKey{"gamma_m", Unit::Metre, 120.0},
    ConfigKey{"gamma_max_m", Unit::Metre, 300.0},
    ConfigKey{"omega_deg", Unit::Degree, 150.0},
    ConfigKey{"omega_b_deg", Unit::Degree, 20.0},
    ConfigKey{"p_w", Unit::Watt, 0.1},
    ConfigKey{"lambda_b_per_km2", Unit::PerKm2, 5.0},
    ConfigKey{"gamma_b_m", Unit::Metre, 30.0},
    ConfigKey{"p_b_w", Unit::Watt, 40.0},
    ConfigKey{"eta_bh", Unit::Dimensionless, 0.31},
    ConfigKey{"phi_d_deg", Unit::Degree, 10.0},
    ConfigKey{"alpha_l", Unit::Dimensionless, 2.1},
    ConfigKey{"alpha_n", Unit::Dimensionless, 4.0},
    ConfigKey{"m_l", Unit::Count, 3.0},
    ConfigKey{"m_n", Unit::Count, 1.0},
    ConfigKey{"sigma2_w", Unit::Watt, 1e-9},
    ConfigKey{"theta_db", Unit::Decibel, 0.0},
    ConfigKey{"theta_b_db", Unit::Decibel, 10.0},
};

std::size_t index_of(std::string_view key)
{
    for (std::size_t i = 0; i < kSchema.size(); ++i)
        if (kSchema[i].name == key)
            return i;
    throw ConfigError("unknown config key '" + std::string(key) + "'");
}

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double si_value(const ConfigKey& key, double v)
{
    switch (key.unit)
    {
    case Unit::PerKm2:
        return v * 1e-6;
    case Unit::Degree:
        return deg_to_rad(v);
    case Unit::Decibel:
        return db_to_linear(v);
    default:
        return v;
    }
}

} // namespace

std::span<const ConfigKey> config_schema() { return kSchema; }

std::string format_number(double v)
{
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), end);
}

double parse_number(std::string_view text)
{
    text = trim(text);
    if (!text.empty() && text.front() == '+')
        text.remove_prefix(1);
    double v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v))
        throw ConfigError("not a finite number: '" + std::string(text) + "'");
    return v;
}

Config::Config() : values_(kSchema.size())
{
    for (std::size_t i = 0; i < kSchema.size(); ++i)
        values_[i] = kSchema[i].default_value;
}

Config Config::parse(std::string_view text, std::string_view origin)
{
    Config config;
    std::vector<bool> seen(kSchema.size(), false);
    std::size_t line_no = 0;
    while (!text.empty())
    {
        ++line_no;
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        const std::string where = std::string(origin) + ":" + std::to_string(line_no) + ": ";
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(where + "expected 'key = value'");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        try
        {
            const auto idx = index_of(key);
            if (seen[idx])
                throw ConfigError("duplicate key '" + std::string(key) + "'");
            seen[idx] = true;
            config.values_[idx] = parse_number(value);
        }
        catch (const ConfigError& e)
        {
            throw ConfigError(where + e.what());
        }
    }
    return config;
}

Config Config::load(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot read config file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path.string());
}

bool Config::has_key(std::string_view key) const
{
    return std::any_of(kSchema.begin(), kSchema.end(), [&](const ConfigKey& k) { return k.name == key; });
}

double Config::get(std::string_view key) const { return values_[index_of(key)]; }

void Config::set(std::string_view key, double value) { values_[index_of(key)] = value; }

void Config::set_text(std::string_view key, std::string_view text)
{
    const auto idx = index_of(key);
    try
    {
        values_[idx] = parse_number(text);
    }
    catch (const ConfigError& e)
    {
        throw ConfigError(std::string(key) + ": " + e.what());
    }
}

void Config::apply_env(const std::function<const char*(const char*)>& lookup)
{
    for (std::size_t i = 0; i < kSchema.size(); ++i)
    {
        std::string var(kEnvPrefix);
        for (char c : kSchema[i].name)
            var += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (const char* v = lookup(var.c_str()))
        {
            try
            {
                values_[i] = parse_number(v);
            }
            catch (const ConfigError& e)
            {
                throw ConfigError(var + ": " + e.what());
            }
        }
    }
}

std::string Config::serialize() const
{
    std::string out;
    for (std::size_t i = 0; i < kSchema.size(); ++i)
    {
        out += kSchema[i].name;
        out += " = ";
        out += format_number(values_[i]);
        out += '\n';
    }
    return out;
}

std::uint64_t fnv1a(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes)
    {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string Config::hash() const
{
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << fnv1a(serialize());
    return os.str();
}

Params to_params(const Config& c)
{
    auto si = [&c](std::string_view key) { return si_value(kSchema[index_of(key)], c.get(key)); };
    Params p;
    p.env = {si("beta_per_km2"), si("delta"), si("kappa_m")};
    p.uav.lambda = si("lambda_per_km2");
    p.uav.gamma = si("gamma_m");
    p.uav.gamma_max = si("gamma_max_m");
    p.uav.omega = si("omega_deg");
    p.uav.omega_b = si("omega_b_deg");
    p.uav.p = si("p_w");
    p.bs = {si("lambda_b_per_km2"), si("gamma_b_m"), si("p_b_w"), si("eta_bh"), si("phi_d_deg")};
    p.channel.alpha_l = si("alpha_l");
    p.channel.alpha_n = si("alpha_n");
    p.channel.m_l = static_cast<int>(c.get("m_l"));
    p.channel.m_n = static_cast<int>(c.get("m_n"));
    p.channel.sigma2 = si("sigma2_w");
    p.thresholds = {si("theta_db"), si("theta_b_db")};
    return p;
}

Params validate(const Config& config)
{
    std::vector<Violation> violations;
    for (const char* key : {"m_l", "m_n"})
    {
        const double v = config.get(key);
        if (v < 1 || v != std::floor(v))
            violations.push_back({key, v, std::string(key) + " must be a positive integer"});
        else if (v > 64)
            violations.push_back({key, v, std::string(key) + " must be at most 64"});
    }
    Params params = to_params(config);
    for (auto& v : check(params))
    {
        // shape errors were already reported against the raw value
        if (v.field == "m_l" || v.field == "m_n")
            continue;
        violations.push_back(std::move(v));
    }
    if (!violations.empty())
        throw ValidationError(std::move(violations));
    return params;
}

} // namespace uavcov
