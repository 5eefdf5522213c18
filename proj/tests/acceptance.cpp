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

// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any fails.

#include <uavcov/analytic.hpp>
#include <uavcov/cli.hpp>
#include <uavcov/montecarlo.hpp>
#include <uavcov/specfun.hpp>

#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

using namespace uavcov;

namespace
{

int failures = 0;

void report(int id, bool ok, const std::string& detail)
{
    std::printf("criterion %2d: %s  %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    failures += !ok;
}

template <class... A> std::string fmt(const char* f, A... a)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, a...);
    return buf;
}

std::vector<double> heights(double lo, double hi, double step)
{
    std::vector<double> g;
    for (double x = lo; x <= hi + 1e-9; x += step)
        g.push_back(x);
    return g;
}

Params random_params(std::mt19937_64& rng)
{
    auto u = [&](double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); };
    Params p;
    p.env = {u(100, 700) * 1e-6, u(0.1, 0.7), u(8, 40)};
    p.uav.lambda = u(2, 80) * 1e-6;
    p.uav.gamma = u(20, 300);
    p.uav.omega = deg_to_rad(u(30, 165));
    p.channel.alpha_l = u(2.0, 3.0);
    p.channel.alpha_n = u(p.channel.alpha_l + 0.3, 5.0);
    p.channel.m_l = static_cast<int>(u(1, 5));
    p.channel.m_n = static_cast<int>(u(1, 4));
    p.thresholds.theta = db_to_linear(u(-10, 10));
    return p;
}

void criterion1()
{
    double worst = 0;
    int bad = 0, points = 0;
    std::size_t idx = 0;
    for (double theta_db : {-5.0, 0.0, 5.0})
        for (double gamma : {60.0, 120.0, 180.0, 240.0, 300.0})
            for (double lambda : {10.0, 25.0, 50.0})
            {
                Params p;
                p.thresholds.theta = db_to_linear(theta_db);
                p.uav.gamma = gamma;
                p.uav.lambda = lambda * 1e-6;
                const double a = analytic::coverage_probability(p).p_cov;
                const auto e = mc::estimate_coverage(p, 20000, 1000 + idx++, Exec::Parallel);
                const double gap = std::abs(a - e.p_cov.p);
                const double tol = std::max(0.02, 3 * e.p_cov.se);
                worst = std::max(worst, gap / tol);
                bad += gap > tol;
                ++points;
            }
    report(1, bad == 0, fmt("cross-engine: %d/%d points within max(0.02, 3 SE); worst gap/tol %.3f", points - bad, points,
                            worst));
}

void criterion2()
{
    std::mt19937_64 rng(2024);
    double worst_value = 0, worst_deriv = 0;
    int configs = 0, derivs = 0;
    while (configs < 100)
    {
        const Params p = random_params(rng);
        if (!check(p).empty())
            continue;
        const analytic::CoverageModel m(p);
        const auto t1 = std::uniform_int_distribution<int>(0, 1)(rng) ? LinkState::Los : LinkState::Nlos;
        const double r1 = std::uniform_real_distribution<double>(0, m.window_radius())(rng);
        const double s = m.transform_variable(r1, t1);
        const auto radii = m.exclusion_radii(r1, t1);
        const int order = 2;
        const auto l = m.laplace_los(s, t1, r1, order);
        const auto n = m.laplace_nlos(s, t1, r1, order);
        const auto ql = oracle::laplace_by_quadrature(p, true, s, radii.c_l, 0);
        const auto qn = oracle::laplace_by_quadrature(p, false, s, radii.c_n, 0);
        worst_value = std::max({worst_value, std::abs(l[0] - ql[0]) / ql[0], std::abs(n[0] - qn[0]) / qn[0]});

        for (bool los : {true, false})
        {
            auto f = [&](double x) {
                return los ? m.laplace_los(x, t1, r1, 0)[0] : m.laplace_nlos(x, t1, r1, 0)[0];
            };
            const auto& v = los ? l : n;
            for (int i = 1; i <= order; ++i)
            {
                if (std::abs(v[i]) <= 1e-12)
                    continue;
                const double fd = oracle::central_difference(f, s, 1e-3 * s, i);
                worst_deriv = std::max(worst_deriv, std::abs(fd - v[i]) / std::abs(v[i]));
                ++derivs;
            }
        }
        ++configs;
    }
    report(2, worst_value <= 1e-6 && worst_deriv <= 1e-4,
           fmt("Laplace: %d configs, worst value rel err %.2e (<= 1e-6); %d derivatives, worst rel err %.2e (<= 1e-4)",
               configs, worst_value, derivs, worst_deriv));
}

void criterion3()
{
    std::mt19937_64 rng(77);
    double worst = 0;
    int sets = 0;
    while (sets < 20)
    {
        const Params p = random_params(rng);
        if (!check(p).empty())
            continue;
        const analytic::CoverageModel m(p);
        const auto r = quad::integrate(
            [&](double x) { return m.serving_density(x, LinkState::Los) + m.serving_density(x, LinkState::Nlos); }, 0.0,
            m.window_radius(), m.integrand_breaks(), {1e-11, 0, 8000});
        worst = std::max(worst, std::abs(r.value - m.association_probability()));
        ++sets;
    }
    report(3, worst <= 1e-6, fmt("density normalisation: 20 sets, worst |integral - p_assoc| %.2e (<= 1e-6)", worst));
}

void criterion4()
{
    Params p;
    const auto grid = heights(10, 300, 10);
    std::vector<double> v;
    for (double g : grid)
    {
        p.uav.gamma = g;
        v.push_back(analytic::coverage_probability(p).p_cov);
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[best])
            best = i;
    const bool ok = best > 0 && best + 1 < v.size() && v.front() < v[best] && v.back() < v[best];
    report(4, ok, fmt("unimodality: gamma in [10, 300] m, max %.4f at %g m, endpoints %.4f / %.2e", v[best], grid[best],
                      v.front(), v.back()));
}

double gamma_star(Params p)
{
    return analytic::optimum_height(p, heights(10, 300, 5), true).gamma;
}

void criterion5()
{
    Params lo, hi;
    lo.uav.lambda = 10e-6;
    hi.uav.lambda = 50e-6;
    const double a = gamma_star(lo), b = gamma_star(hi);
    report(5, a > b, fmt("optimum height ordering: gamma*(10/km2) = %.1f m > gamma*(50/km2) = %.1f m", a, b));
}

void criterion6()
{
    Params narrow, wide;
    narrow.uav.lambda = wide.uav.lambda = 50e-6;
    narrow.uav.omega = deg_to_rad(70);
    wide.uav.omega = deg_to_rad(150);
    const double a = gamma_star(narrow), b = gamma_star(wide);
    report(6, a > b, fmt("beamwidth ordering at 50/km2: gamma*(70 deg) = %.1f m > gamma*(150 deg) = %.1f m", a, b));
}

void criterion7()
{
    std::vector<mc::Estimate> e;
    for (double lb : {1.0, 5.0, 10.0})
    {
        Params p;
        p.bs.lambda_b = lb * 1e-6;
        e.push_back(mc::estimate_backhaul(p, 150, 10000, 700, Exec::Parallel));
    }
    bool ok = true;
    for (std::size_t i = 1; i < e.size(); ++i)
        ok = ok && e[i].p >= e[i - 1].p - 3 * std::hypot(e[i].se, e[i - 1].se);
    report(7, ok, fmt("backhaul vs BS density at 150 m: %.4f, %.4f, %.4f (SE ~%.4f)", e[0].p, e[1].p, e[2].p, e[1].se));
}

void criterion8()
{
    Params narrow, wide;
    narrow.uav.omega_b = deg_to_rad(10);
    wide.uav.omega_b = deg_to_rad(40);
    const auto a = mc::estimate_backhaul(narrow, 150, 10000, 800, Exec::Parallel);
    const auto b = mc::estimate_backhaul(wide, 150, 10000, 800, Exec::Parallel);
    const double se = std::hypot(a.se, b.se);
    report(8, a.p - b.p > 3 * se,
           fmt("backhaul beamwidth: 10 deg %.4f vs 40 deg %.4f, gap %.4f > 3 SE = %.4f", a.p, b.p, a.p - b.p, 3 * se));
}

void criterion9()
{
    Params p; // reference scenario, omega_b = 20 deg, lambda = 25/km^2
    const auto opt = analytic::optimum_height(p, heights(10, 300, 10), true);
    mc::ScenarioOptions so;
    so.gamma_init = opt.gamma;
    const auto e = mc::estimate_scenario(p, so, 4000, 900, Exec::Parallel);
    const double excess = e.mean_height - opt.gamma;
    const double gap = std::abs(e.joint_coverage.p - opt.p_cov);
    report(9, excess > 0 && excess < 50 && gap <= 0.1,
           fmt("scenario: gamma* %.1f m, mean height %.1f m (excess %.1f m in (0, 50)); joint coverage %.4f vs %.4f "
               "(gap %.4f <= 0.1)",
               opt.gamma, e.mean_height, excess, e.joint_coverage.p, opt.p_cov, gap));
}

void criterion10()
{
    bool ok = true;
    double worst_id = 0, worst_contig = 0, worst_branch = 0, worst_fdb = 0;
    std::mt19937_64 rng(10);
    auto u = [&](double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); };
    for (int k = 0; k < 50; ++k)
    {
        const double a = u(0.3, 4), b = u(0.3, 4), c = u(1.1, 5);
        ok = ok && specfun::hyp2f1(a, b, c, 0.0) == 1.0;
        const double z = -std::pow(10.0, u(-3, 3));
        worst_id = std::max(worst_id, std::abs(specfun::hyp2f1(1, 1, 2, z) / (std::log1p(-z) / -z) - 1));
        const double fd =
            oracle::central_difference([&](double x) { return specfun::hyp2f1(a, b, c, x); }, z, 1e-4 * std::abs(z), 1);
        const double exact = a * b / c * specfun::hyp2f1(a + 1, b + 1, c + 1, z);
        worst_contig = std::max(worst_contig, std::abs(fd / exact - 1));
        const double zz = u(-0.5, 0.0);
        worst_branch = std::max(worst_branch, std::abs(specfun::hyp2f1_pfaff(a, b, c, zz) /
                                                           specfun::hyp2f1_series(a, b, c, zz) -
                                                       1));
    }
    for (int n = 1; n <= 5; ++n)
        for (int t = 0; t < 10; ++t)
        {
            std::vector<double> y(static_cast<std::size_t>(n) + 1);
            for (auto& v : y)
                v = u(-2, 2);
            const auto got = specfun::exp_composite_derivatives(y);
            const auto want = oracle::exp_derivatives(y);
            worst_fdb = std::max(worst_fdb, std::abs(got[n] - want[n]) / std::max(1e-300, std::abs(want[n])));
        }
    ok = ok && worst_id <= 1e-12 && worst_contig <= 1e-6 && worst_branch <= 1e-12 && worst_fdb <= 1e-12;
    report(10, ok,
           fmt("special functions: log identity %.1e, contiguous relation %.1e, Pfaff vs series %.1e, "
               "Faa di Bruno n<=5 %.1e",
               worst_id, worst_contig, worst_branch, worst_fdb));
}

std::string capture(const std::vector<std::string>& args, int& code)
{
    std::ostringstream out, err;
    code = cli::run(args, out, err, [](const char*) -> const char* { return nullptr; });
    return out.str();
}

void criterion11()
{
    const std::vector<std::vector<std::string>> commands{
        {"coverage", "--engine", "both", "--trials", "3000", "--seed", "7", "--jobs", "2"},
        {"sweep", "--axis", "gamma_m=60,180", "--axis", "lambda_per_km2=10,50", "--engine", "both", "--trials", "1000",
         "--seed", "11", "--jobs", "2"},
        {"sweep", "--axis", "omega_b_deg=10,40", "--measure", "backhaul", "--trials", "1000", "--seed", "5",
         "--format", "json", "--jobs", "2"},
        {"opt-height", "--grid", "20:200:20", "--refine", "--jobs", "2"},
        {"backhaul", "--heights", "40,150", "--trials", "1000", "--seed", "3", "--jobs", "2"},
        {"scenario", "--trials", "100", "--seed", "9", "--jobs", "2"},
    };
    int identical = 0;
    bool ok = true;
    for (const auto& c : commands)
    {
        int c1 = 0, c2 = 0;
        const auto a = capture(c, c1);
        const auto b = capture(c, c2);
        const bool same = c1 == 0 && c2 == 0 && !a.empty() && a == b;
        identical += same;
        ok = ok && same;
    }
    report(11, ok, fmt("determinism: %d/%zu commands byte-identical on repeat", identical, commands.size()));
}

} // namespace

int main()
{
    const auto start = std::chrono::steady_clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("acceptance: %d failure(s), %.1f s\n", failures, secs);
    set_jobs(0);
    return failures == 0 ? 0 : 1;
}
