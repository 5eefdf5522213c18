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

#include <uavcov/model.hpp>

#include <sstream>

namespace uavcov
{

namespace
{

std::string describe(const std::vector<Violation>& violations)
{
    std::ostringstream os;
    os << "invalid parameters:";
    for (const auto& v : violations)
        os << "\n  " << v.field << " = " << v.value << ": " << v.constraint;
    return os.str();
}

} // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error(describe(violations)), violations_(std::move(violations))
{
}

std::vector<Violation> check(const Params& p)
{
    std::vector<Violation> out;
    auto require = [&out](bool ok, const char* field, double value, const char* constraint) {
        if (!ok)
            out.push_back({field, value, constraint});
    };
    constexpr double pi = std::numbers::pi;

    require(p.env.beta > 0, "beta", p.env.beta, "beta > 0");
    require(p.env.delta > 0 && p.env.delta < 1, "delta", p.env.delta, "0 < delta < 1");
    require(p.env.kappa > 0, "kappa", p.env.kappa, "kappa > 0");

    require(p.uav.lambda > 0, "lambda", p.uav.lambda, "lambda > 0");
    require(p.uav.gamma > 0, "gamma", p.uav.gamma, "gamma > 0");
    require(p.uav.omega > 0 && p.uav.omega < pi, "omega", p.uav.omega, "0 < omega < pi");
    require(p.uav.omega_b > 0 && p.uav.omega_b < pi, "omega_b", p.uav.omega_b, "0 < omega_b < pi");
    require(p.uav.p > 0, "p", p.uav.p, "p > 0");

    require(p.bs.lambda_b > 0, "lambda_b", p.bs.lambda_b, "lambda_b > 0");
    require(p.bs.gamma_b > 0, "gamma_b", p.bs.gamma_b, "gamma_b > 0");
    require(p.bs.p_b > 0, "p_b", p.bs.p_b, "p_b > 0");
    require(p.bs.eta_bh > 0 && p.bs.eta_bh <= 1, "eta_bh", p.bs.eta_bh, "0 < eta_bh <= 1");
    require(p.bs.phi_d >= 0, "phi_d", p.bs.phi_d, "phi_d >= 0");
    require(p.uav.gamma_max > p.bs.gamma_b, "gamma_max", p.uav.gamma_max, "gamma_max > gamma_b");

    require(p.channel.alpha_l >= 2, "alpha_l", p.channel.alpha_l, "alpha_l >= 2");
    require(p.channel.alpha_l < p.channel.alpha_n, "alpha_l", p.channel.alpha_l, "alpha_l < alpha_n violated");
    require(p.channel.m_l >= 1, "m_l", p.channel.m_l, "m_l must be a positive integer");
    require(p.channel.m_n >= 1, "m_n", p.channel.m_n, "m_n must be a positive integer");
    require(p.channel.sigma2 >= 0, "sigma2", p.channel.sigma2, "sigma2 >= 0");

    require(p.thresholds.theta > 0, "theta", p.thresholds.theta, "theta > 0");
    require(p.thresholds.theta_b > 0, "theta_b", p.thresholds.theta_b, "theta_b > 0");
    return out;
}

const Params& require_valid(const Params& params)
{
    auto violations = check(params);
    if (!violations.empty())
        throw ValidationError(std::move(violations));
    return params;
}

double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }
double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

} // namespace uavcov
