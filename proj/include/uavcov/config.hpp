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

#ifndef UAVCOV_CONFIG_HPP
#define UAVCOV_CONFIG_HPP

#include <uavcov/model.hpp>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace uavcov
{

// Config files are flat `key = value` text. Every key carries its unit in its
// name (`omega_deg`, `lambda_per_km2`, `theta_db`, ...). Values are stored in
// those config units; to_params() is the single place that converts to SI.
//
//   # reference urban scenario
//   lambda_per_km2 = 25
//   gamma_m = 120
//   theta_db = 0
//
// Keys absent from a file keep their defaults; unknown keys are errors.

enum class Unit
{
    Dimensionless,
    PerKm2,
    Metre,
    Degree,
    Decibel,
    Watt,
    Count
};

struct ConfigKey
{
    std::string_view name;
    Unit unit;
    double default_value;
};

std::span<const ConfigKey> config_schema();

/// Environment variable prefix for overriding any config key, e.g.
/// UAVCOV_THETA_DB=5 overrides theta_db.
inline constexpr std::string_view kEnvPrefix = "UAVCOV_";

class ConfigError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

class Config
{
  public:
    Config();

    static Config parse(std::string_view text, std::string_view origin = "<string>");
    static Config load(const std::filesystem::path& path);

    bool has_key(std::string_view key) const;
    double get(std::string_view key) const;
    void set(std::string_view key, double value);
    /// Parses `text` as a number for `key`; throws ConfigError naming both on failure.
    void set_text(std::string_view key, std::string_view text);

    /// Applies UAVCOV_<KEY> overrides using the supplied lookup (std::getenv in production).
    void apply_env(const std::function<const char*(const char*)>& lookup);

    /// Canonical text: every key in schema order, shortest round-trip numbers.
    std::string serialize() const;
    /// FNV-1a of serialize(), as 16 hex digits.
    std::string hash() const;

    bool operator==(const Config&) const = default;

  private:
    std::vector<double> values_;
};

/// Shortest decimal text that parses back to exactly `v`.
std::string format_number(double v);
/// Strict full-string parse; throws ConfigError on trailing junk or empty input.
double parse_number(std::string_view text);

/// Unit conversion only; no checking.
Params to_params(const Config& config);

/// Converts and checks every invariant (including integral Nakagami shapes,
/// which to_params would otherwise truncate). Throws ValidationError.
Params validate(const Config& config);

std::uint64_t fnv1a(std::string_view bytes);

} // namespace uavcov

#endif
