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

#include <uavcov/montecarlo.hpp>

#include <uavcov/losenv.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace uavcov::mc
{

namespace
{

constexpr double kPi = std::numbers::pi;
constexpr double kBsTailMass = 1e-6;
constexpr double kStartClearance = 1.0; // m above gamma_b

bool draw_los(double p, Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }

struct Link
{
    bool los;
    double mean_power; // without fading
    double power;      // with fading
};

Link draw_link(const ChannelParams& ch, double p_los, double gain, double d2, Rng& rng)
{
    Link l;
    l.los = draw_los(p_los, rng);
    const double alpha = l.los ? ch.alpha_l : ch.alpha_n;
    l.mean_power = gain * std::pow(d2, -alpha / 2.0);
    l.power = l.mean_power * sample_fading(l.los ? ch.m_l : ch.m_n, rng);
    return l;
}

} // namespace

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng trial_rng(std::uint64_t master, std::uint64_t index) { return Rng(splitmix64(splitmix64(master) ^ index)); }

std::vector<Point2> sample_ppp(double intensity, Point2 center, double radius, Rng& rng)
{
    if (!(radius > 0))
        throw std::invalid_argument("sample_ppp needs a positive radius");
    std::vector<Point2> pts;
    if (intensity <= 0)
        return pts;
    const auto count = std::poisson_distribution<long>(intensity * kPi * radius * radius)(rng);
    pts.reserve(static_cast<std::size_t>(count));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (long k = 0; k < count; ++k)
    {
        const double rho = radius * std::sqrt(unit(rng));
        const double theta = 2.0 * kPi * unit(rng);
        pts.push_back({center.x + rho * std::cos(theta), center.y + rho * std::sin(theta)});
    }
    return pts;
}

double sample_fading(int m, Rng& rng)
{
    if (m < 1)
        throw std::invalid_argument("fading shape must be at least 1");
    return std::gamma_distribution<double>(m, 1.0 / m)(rng);
}

TrialOutcome evaluate_user_link(const Params& params, std::span<const UavSite> uavs, Association association,
                                Rng& rng)
{
    const double gain = params.uav.p * antenna::uav_gain(params.uav.omega);
    std::vector<Link> links;
    links.reserve(uavs.size());
    for (const auto& u : uavs)
    {
        const double r = std::hypot(u.position.x, u.position.y);
        if (!antenna::in_user_lobe(u.gamma, r, params.uav.omega))
            continue;
        const double pl = los::p_los(params.env, {u.gamma, 0.0, r});
        links.push_back(draw_link(params.channel, pl, gain, r * r + u.gamma * u.gamma, rng));
    }

    TrialOutcome out;
    if (links.empty())
        return out;
    out.associated = true;
    std::size_t best = 0;
    double total = 0;
    for (std::size_t i = 0; i < links.size(); ++i)
    {
        total += links[i].power;
        const double key = association == Association::Averaged ? links[i].mean_power : links[i].power;
        const double top = association == Association::Averaged ? links[best].mean_power : links[best].power;
        if (key > top)
            best = i;
    }
    const double signal = links[best].power;
    const double interference = std::max(0.0, total - signal);
    const double noise = params.channel.sigma2;
    out.serving_los = links[best].los;
    out.sinr_user = interference + noise > 0 ? signal / (interference + noise) : std::numeric_limits<double>::infinity();
    out.covered = out.sinr_user >= params.thresholds.theta;
    return out;
}

TrialOutcome user_link_trial(const Params& params, Association association, Rng& rng)
{
    const double radius = coverage_radius(params.uav.omega, params.uav.gamma);
    const auto pts = sample_ppp(params.uav.lambda, {0, 0}, radius, rng);
    std::vector<UavSite> uavs;
    uavs.reserve(pts.size());
    for (const auto& p : pts)
        uavs.push_back({p, params.uav.gamma});
    return evaluate_user_link(params, uavs, association, rng);
}

double bs_disk_radius(double lambda_b) { return std::sqrt(-std::log(kBsTailMass) / (kPi * lambda_b)); }

BackhaulOutcome evaluate_backhaul(const Params& params, Point2 position, double gamma, std::span<const Point2> bss,
                                  double reach, Rng& rng)
{
    BackhaulOutcome out;
    if (bss.empty())
        return out;
    const auto& bs = params.bs;
    std::size_t j = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < bss.size(); ++k)
    {
        const double d = antenna::distance(position, bss[k]);
        if (d < best)
        {
            best = d;
            j = k;
        }
    }
    out.serving = j;

    const double rise = gamma - bs.gamma_b;
    const double uav_gain = antenna::uav_gain(params.uav.omega_b);
    auto link = [&](double r) {
        const double phi = std::atan2(rise, r);
        const double gain = bs.p_b * uav_gain * antenna::bs_total_gain(phi, bs);
        const double pl = los::p_los(params.env, {bs.gamma_b, gamma, r});
        return draw_link(params.channel, pl, gain, r * r + rise * rise, rng);
    };

    const double phi_j = std::atan2(rise, best);
    const double heading = best > 0 ? std::atan2(bss[j].y - position.y, bss[j].x - position.x) : 0.0;
    auto sector = antenna::backhaul_footprint(gamma, bs, phi_j, params.uav.omega_b, position, heading);
    sector.major = std::min(sector.major, reach);

    const double signal = link(best).power;
    double interference = 0;
    for (std::size_t k = 0; k < bss.size(); ++k)
    {
        if (k == j || !antenna::sector_contains(sector, bss[k]))
            continue;
        interference += link(antenna::distance(position, bss[k])).power;
        ++out.interferers;
    }
    const double denom = interference + params.channel.sigma2;
    out.sinr = denom > 0 ? signal / denom : std::numeric_limits<double>::infinity();
    out.ok = out.sinr >= params.thresholds.theta_b;
    return out;
}

BackhaulOutcome backhaul_trial(const Params& params, double gamma, Rng& rng)
{
    if (!(gamma > params.bs.gamma_b))
        throw std::invalid_argument("backhaul trial needs the UAV above the BS height");
    const double reach = bs_disk_radius(params.bs.lambda_b);
    const auto bss = sample_ppp(params.bs.lambda_b, {0, 0}, reach, rng);
    return evaluate_backhaul(params, {0, 0}, gamma, bss, reach, rng);
}

ScenarioOutcome height_optimization_scenario(const Params& params, const ScenarioOptions& options, Rng& rng)
{
    if (!(options.step > 0))
        throw std::invalid_argument("scenario climb step must be positive");
    const double cap = params.uav.gamma_max;
    const double start = std::min(cap, std::max(options.gamma_init, params.bs.gamma_b + kStartClearance));
    const double user_radius = coverage_radius(params.uav.omega, cap);
    const double reach = bs_disk_radius(params.bs.lambda_b);

    const auto uav_pts = sample_ppp(params.uav.lambda, {0, 0}, user_radius, rng);
    const auto bss = sample_ppp(params.bs.lambda_b, {0, 0}, user_radius + reach, rng);

    ScenarioOutcome out;
    out.heights.reserve(uav_pts.size());
    std::vector<UavSite> serving;
    for (const auto& p : uav_pts)
    {
        double gamma = start;
        bool ok = false;
        for (;;)
        {
            ok = evaluate_backhaul(params, p, gamma, bss, reach, rng).ok;
            if (ok || gamma >= cap)
                break;
            gamma = std::min(cap, gamma + options.step);
        }
        out.heights.push_back(gamma);
        if (ok)
            serving.push_back({p, gamma});
        else
            ++out.outages;
    }
    out.user = evaluate_user_link(params, serving, options.association, rng);
    out.user.backhaul_ok = out.user.associated;
    return out;
}

Estimate estimate(std::size_t successes, std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("estimate needs at least one trial");
    const double p = static_cast<double>(successes) / static_cast<double>(n);
    return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n)), n};
}

CoverageEstimate estimate_coverage(const Params& params, std::size_t trials, std::uint64_t seed, Exec exec,
                                   Association association)
{
    require_valid(params);
    const auto outcomes = run_trials<TrialOutcome>(
        trials, seed, exec, [&](std::size_t, Rng& rng) { return user_link_trial(params, association, rng); });
    std::size_t covered = 0, associated = 0, los = 0;
    for (const auto& o : outcomes)
    {
        covered += o.covered;
        associated += o.associated;
        los += o.associated && o.serving_los;
    }
    CoverageEstimate out;
    out.p_cov = estimate(covered, trials);
    out.p_assoc = estimate(associated, trials);
    if (associated > 0)
        out.p_los_serving = estimate(los, associated);
    return out;
}

Estimate estimate_backhaul(const Params& params, double gamma, std::size_t trials, std::uint64_t seed, Exec exec)
{
    require_valid(params);
    const auto outcomes = run_trials<char>(trials, seed, exec, [&](std::size_t, Rng& rng) {
        return static_cast<char>(backhaul_trial(params, gamma, rng).ok);
    });
    return estimate(static_cast<std::size_t>(std::count(outcomes.begin(), outcomes.end(), 1)), trials);
}

ScenarioEstimate estimate_scenario(const Params& params, const ScenarioOptions& options, std::size_t trials,
                                   std::uint64_t seed, Exec exec)
{
    require_valid(params);
    const auto outcomes = run_trials<ScenarioOutcome>(trials, seed, exec, [&](std::size_t, Rng& rng) {
        return height_optimization_scenario(params, options, rng);
    });
    std::size_t covered = 0, uavs = 0, outages = 0;
    double sum = 0, sum2 = 0;
    for (const auto& o : outcomes)
    {
        covered += o.user.covered;
        outages += o.outages;
        for (double h : o.heights)
        {
            sum += h;
            sum2 += h * h;
        }
        uavs += o.heights.size();
    }
    ScenarioEstimate out;
    out.joint_coverage = estimate(covered, trials);
    out.uavs = uavs;
    if (uavs > 0)
    {
        const double n = static_cast<double>(uavs);
        out.mean_height = sum / n;
        const double var = std::max(0.0, sum2 / n - out.mean_height * out.mean_height);
        out.mean_height_se = std::sqrt(var / n);
        out.outage_fraction = static_cast<double>(outages) / n;
    }
    return out;
}

} // namespace uavcov::mc
