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

#ifndef UAVCOV_MONTECARLO_HPP
#define UAVCOV_MONTECARLO_HPP

#include <uavcov/antenna.hpp>
#include <uavcov/model.hpp>
#include <uavcov/parallel.hpp>

#include <cstdint>
#include <random>
#include <span>
#include <vector>

/// Stochastic engine for the full system: UAV and BS Poisson fields,
/// independent Bernoulli LOS per link, Nakagami-m power fading, user and
/// backhaul SINR, and the climb-until-backhaul height scenario.
///
/// Every trial draws from its own generator seeded from (master seed, trial
/// index), so results do not depend on thread count or scheduling.
namespace uavcov::mc
{

using Rng = std::mt19937_64;
using antenna::Point2;

std::uint64_t splitmix64(std::uint64_t x);
/// Generator for trial `index` under `master`.
Rng trial_rng(std::uint64_t master, std::uint64_t index);

/// Homogeneous PPP restricted to a disk.
std::vector<Point2> sample_ppp(double intensity, Point2 center, double radius, Rng& rng);

/// Gamma(m, 1/m) power gain.
double sample_fading(int m, Rng& rng);

/// How the reference user picks its serving UAV.
enum class Association
{
    Averaged,      // strongest fading-free received power
    Instantaneous, // strongest received power including fading
};

struct TrialOutcome
{
    bool associated = false;
    bool backhaul_ok = true;
    bool covered = false;
    bool serving_los = false;
    double sinr_user = 0;
    double sinr_backhaul = 0;
};

struct UavSite
{
    Point2 position;
    double gamma;
};

/// User link for a reference user at the origin, given the UAVs allowed to
/// transmit. LOS states and fading are drawn here.
TrialOutcome evaluate_user_link(const Params& params, std::span<const UavSite> uavs, Association association,
                                Rng& rng);

/// One user-link trial with every UAV at params.uav.gamma.
TrialOutcome user_link_trial(const Params& params, Association association, Rng& rng);

/// BS sampling radius with exp(-lambda_b pi R^2) = 1e-6.
double bs_disk_radius(double lambda_b);

struct BackhaulOutcome
{
    bool ok = false;
    double sinr = 0;
    std::size_t serving = 0;
    std::size_t interferers = 0;
};

/// Backhaul SINR of a UAV at `position`, height `gamma` against a fixed BS
/// field. The footprint's outer radius is cut at `reach`. No BS at all means
/// no backhaul.
BackhaulOutcome evaluate_backhaul(const Params& params, Point2 position, double gamma, std::span<const Point2> bss,
                                  double reach, Rng& rng);

/// One backhaul trial: fresh BS field in a disk of radius bs_disk_radius
/// around a UAV at the origin. Requires gamma > gamma_b.
BackhaulOutcome backhaul_trial(const Params& params, double gamma, Rng& rng);

struct ScenarioOptions
{
    double gamma_init = 0; // start height; clamped to gamma_b + 1 m
    double step = 5;       // climb per failed attempt (m)
    Association association = Association::Averaged;
};

struct ScenarioOutcome
{
    TrialOutcome user;
    std::vector<double> heights; // final height of every UAV in the field
    std::size_t outages = 0;
};

/// UAVs start at gamma_init and climb in `step` increments, with the link
/// LOS and fading re-drawn each attempt, until their backhaul holds or they
/// fail at gamma_max (outage). Outage UAVs neither serve nor interfere.
ScenarioOutcome height_optimization_scenario(const Params& params, const ScenarioOptions& options, Rng& rng);

struct Estimate
{
    double p = 0;
    double se = 0;
    std::size_t n = 0;
};

Estimate estimate(std::size_t successes, std::size_t n);

struct CoverageEstimate
{
    Estimate p_cov;
    Estimate p_assoc;
    Estimate p_los_serving; // over associated trials
};

CoverageEstimate estimate_coverage(const Params& params, std::size_t trials, std::uint64_t seed, Exec exec,
                                   Association association = Association::Averaged);

Estimate estimate_backhaul(const Params& params, double gamma, std::size_t trials, std::uint64_t seed, Exec exec);

struct ScenarioEstimate
{
    Estimate joint_coverage;
    double mean_height = 0;
    double mean_height_se = 0;
    double outage_fraction = 0;
    std::size_t uavs = 0;
};

ScenarioEstimate estimate_scenario(const Params& params, const ScenarioOptions& options, std::size_t trials,
                                   std::uint64_t seed, Exec exec);

/// Runs trial(i, rng) for i in [0, n) with per-trial generators.
template <class T, class F>
std::vector<T> run_trials(std::size_t n, std::uint64_t seed, Exec exec, F&& trial)
{
    std::vector<T> out(n);
    for_each_index(n, exec, [&](std::size_t i) {
        Rng rng = trial_rng(seed, i);
        out[i] = trial(i, rng);
    });
    return out;
}

} // namespace uavcov::mc

#endif
