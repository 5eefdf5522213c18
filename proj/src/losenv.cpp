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

#include <uavcov/losenv.hpp>

#include <algorithm>
#include <cmath>

namespace uavcov::los
{

namespace
{

constexpr int kLogSpaceAbove = 50;

double density_scale(const EnvironmentParams& env) { return std::sqrt(env.beta * env.delta); }

} // namespace

int building_count(const EnvironmentParams& env, double r)
{
    return static_cast<int>(std::floor(r * density_scale(env)));
}

double breakpoint(const EnvironmentParams& env, int j) { return j / density_scale(env); }

double p_los_for_count(const EnvironmentParams& env, double gamma_tx, double gamma_rx, int d)
{
    if (d <= 0)
        return 1.0;
    const double top = std::max(gamma_tx, gamma_rx);
    const double span = std::abs(gamma_tx - gamma_rx);
    const double two_k2 = 2.0 * env.kappa * env.kappa;

    if (d <= kLogSpaceAbove)
    {
        double prob = 1.0;
        for (int n = 0; n < d; ++n)
        {
            const double h = top - (n + 0.5) * span / d;
            prob *= 1.0 - std::exp(-h * h / two_k2);
        }
        return prob;
    }
    double log_prob = 0.0;
    for (int n = 0; n < d; ++n)
    {
        const double h = top - (n + 0.5) * span / d;
        log_prob += std::log1p(-std::exp(-h * h / two_k2));
    }
    return std::exp(log_prob);
}

double p_los(const EnvironmentParams& env, const LosQuery& q)
{
    return p_los_for_count(env, q.gamma_tx, q.gamma_rx, building_count(env, q.r));
}

double building_height_pdf(const EnvironmentParams& env, double h)
{
    if (h < 0)
        return 0.0;
    const double k2 = env.kappa * env.kappa;
    return h / k2 * std::exp(-h * h / (2.0 * k2));
}

std::vector<Plateau> p_los_piecewise(const EnvironmentParams& env, double gamma_tx, double gamma_rx, double r_max)
{
    const int last = building_count(env, r_max);
    std::vector<Plateau> out;
    out.reserve(static_cast<std::size_t>(last) + 1);
    for (int j = 0; j <= last; ++j)
    {
        const double lo = j == 0 ? 0.0 : std::min(breakpoint(env, j), r_max);
        const double hi = j == last ? r_max : breakpoint(env, j + 1);
        out.push_back({lo, hi, p_los_for_count(env, gamma_tx, gamma_rx, j), j});
    }
    return out;
}

} // namespace uavcov::los
