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

#include <uavcov/analytic.hpp>
#include <uavcov/antenna.hpp>
#include <uavcov/specfun.hpp>

#include "oracle_values.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

using namespace uavcov;
using namespace uavcov::analytic;

namespace
{

bool close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::abs(b); }

Params reference(double gamma = 120)
{
    Params p;
    p.uav.gamma = gamma;
    return p;
}

// Buildings vanish: every link is LOS.
Params open_sky()
{
    Params p = reference();
    p.env.delta = 1e-9;
    return p;
}

} // namespace

TEST_SUITE("analytic")
{
    TEST_CASE("exclusion radii")
    {
        ChannelParams ch;
        const double w = deg_to_rad(150);
        auto e = exclusion_radii(50, LinkState::Los, 120, w, ch);
        CHECK(e.c_l == 50);
        CHECK(e.c_n == 0.0); // (r1^2 + gamma^2)^(alpha_l/alpha_n) < gamma^2 here
        e = exclusion_radii(50, LinkState::Los, 0.5, w, ch);
        CHECK(e.c_n == doctest::Approx(std::sqrt(std::pow(50.0 * 50 + 0.25, 2.1 / 4) - 0.25)));
        CHECK(exclusion_radii(0, LinkState::Los, 100, w, ch).c_n == 0.0);

        ChannelParams same = ch;
        same.alpha_n = same.alpha_l;
        CHECK(exclusion_radii(77, LinkState::Los, 120, w, same).c_n == doctest::Approx(77).epsilon(1e-12));

        e = exclusion_radii(300, LinkState::Nlos, 120, w, ch);
        CHECK(e.c_n == 300);
        CHECK(e.c_l == coverage_radius(w, 120));
    }

    TEST_CASE("serving densities")
    {
        const CoverageModel m(reference());
        CHECK(close(m.serving_density(50, LinkState::Los), oracle::f_l_50, 1e-12));
        CHECK(m.serving_density(50, LinkState::Nlos) == oracle::f_n_50);
        CHECK(m.serving_density(-1, LinkState::Los) == 0.0);
        CHECK(m.serving_density(m.window_radius() + 1, LinkState::Los) == 0.0);

        const CoverageModel sky(open_sky());
        const double lam = sky.params().uav.lambda;
        for (double r : {0.0, 10.0, 100.0, 300.0})
        {
            CHECK(sky.serving_density(r, LinkState::Nlos) == 0.0);
            const double want = 2 * std::numbers::pi * lam * r * std::exp(-std::numbers::pi * lam * r * r);
            CHECK(sky.serving_density(r, LinkState::Los) == doctest::Approx(want).epsilon(1e-12));
        }
        CHECK(sky.p_los_serving() == doctest::Approx(1.0).epsilon(1e-9));
    }

    TEST_CASE("plateau moments are exact")
    {
        const CoverageModel m(reference());
        const Params& p = m.params();
        for (double x : {0.0, 30.0, 81.6, 200.0, 447.0})
        {
            const double want = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
                [&](double r) { return los::p_los(p.env, {120, 0, r}) * r; }, 0.0, x, 25, 1e-13);
            CHECK(m.los_moment(x) == doctest::Approx(want).epsilon(1e-9));
            CHECK(m.los_moment(x) + m.nlos_moment(x) == doctest::Approx(0.5 * x * x).epsilon(1e-13));
        }
    }

    TEST_CASE("normalization to the association probability")
    {
        for (double gamma : {40.0, 120.0, 260.0})
        {
            const CoverageModel m(reference(gamma));
            const auto breaks = m.integrand_breaks();
            const auto r = quad::integrate(
                [&](double x) { return m.serving_density(x, LinkState::Los) + m.serving_density(x, LinkState::Nlos); },
                0.0, m.window_radius(), breaks, {1e-12, 0, 4000});
            CHECK(std::abs(r.value - m.association_probability()) < 1e-9);
        }
    }

    TEST_CASE("serving LOS probability shape")
    {
        std::vector<double> v;
        for (double g = 10; g <= 300; g += 10)
        {
            const double p = p_los_serving(reference(g));
            CHECK(p >= 0.0);
            CHECK(p <= 1.0);
            v.push_back(p);
        }
        const double dip = *std::min_element(v.begin(), v.end());
        CHECK(v.front() > dip + 0.02);
        CHECK(v.back() > dip + 0.02);
        CHECK(v.back() > 0.99);
    }

    TEST_CASE("Laplace transforms at the reference point")
    {
        const CoverageModel m(reference());
        const double s = m.transform_variable(50, LinkState::Los);
        CHECK(close(s, oracle::s_l_50, 1e-14));
        const auto l = m.laplace_los(s, LinkState::Los, 50, 2);
        const auto n = m.laplace_nlos(s, LinkState::Los, 50, 2);
        for (int i = 0; i < 3; ++i)
        {
            CHECK(close(l[i], oracle::los_transform_50[i], 1e-9));
            CHECK(close(n[i], oracle::nlos_transform_50[i], 1e-6));
        }
        const auto ql = oracle::laplace_by_quadrature(m.params(), true, s, 50, 2);
        const auto qn = oracle::laplace_by_quadrature(m.params(), false, s, m.exclusion_radii(50, LinkState::Los).c_n, 2);
        for (int i = 0; i < 3; ++i)
        {
            CHECK(close(l[i], ql[i], 1e-9));
            CHECK(close(n[i], qn[i], 1e-6));
        }
    }

    TEST_CASE("Laplace transform limits")
    {
        Params sparse = reference();
        sparse.uav.lambda = 1e-22;
        const CoverageModel m(sparse);
        const auto l = m.laplace_los(1e5, LinkState::Los, 50, 2);
        CHECK(l[0] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(l[1]) < 1e-15);

        const CoverageModel ref(reference());
        const auto edge = ref.interference_transform(LinkState::Los, 1e5, ref.window_radius(), 2);
        CHECK(edge[0] == 1.0);
        CHECK(edge[1] == 0.0);
        CHECK(edge[2] == 0.0);

        const auto zero = ref.interference_transform(LinkState::Los, 0.0, 10, 2);
        CHECK(zero[0] == 1.0);
    }

    TEST_CASE("transforms are completely monotone in s")
    {
        const CoverageModel m(reference());
        double prev = 1.0;
        for (double s = 1e2; s < 1e9; s *= 3)
        {
            const auto v = m.interference_transform(LinkState::Los, s, 20, 3);
            CHECK(v[0] > 0.0);
            CHECK(v[0] <= prev * (1 + 1e-14));
            CHECK(v[1] <= 0.0);
            CHECK(v[2] >= 0.0);
            CHECK(v[3] <= 0.0);
            prev = v[0];
        }
    }

    TEST_CASE("derivatives at s = 0 are interference moments")
    {
        const CoverageModel m(reference());
        const auto at0 = m.interference_transform(LinkState::Nlos, 0.0, 30, 2);
        const double h = 1e-3;
        const auto near = m.interference_transform(LinkState::Nlos, h, 30, 1);
        CHECK(close((near[0] - at0[0]) / h, at0[1], 1e-3));
    }

    TEST_CASE("power derivative matches the closed form")
    {
        std::mt19937_64 rng(8);
        std::uniform_real_distribution<double> A(0.1, 1e4), S(1, 1e6);
        for (int k = 0; k < 100; ++k)
        {
            const double a = A(rng), s = S(rng);
            for (int p = 1; p <= 4; ++p)
                for (int i = 0; i <= 4; ++i)
                {
                    const double z = -a / s;
                    const double want = std::pow(z, p) * (i % 2 ? -1.0 : 1.0) * specfun::rising_factorial(p, i) *
                                        std::pow(s, -i);
                    const double got = power_derivative(i, p, a, s);
                    CHECK(std::abs(got - want) <= 1e-12 * std::abs(want) + 1e-300);
                }
        }
    }

    TEST_CASE("conditional coverage")
    {
        const CoverageModel m(reference());
        CHECK(close(m.conditional_coverage(50, LinkState::Los), oracle::cond_cov_l_50, 1e-9));
        CHECK(close(m.conditional_coverage(50, LinkState::Nlos), oracle::cond_cov_n_50, 1e-9));

        // Rayleigh serving link with nothing else around
        Params quiet = reference();
        quiet.uav.lambda = 1e-22;
        quiet.channel.sigma2 = 0;
        quiet.channel.m_l = 1;
        CHECK(CoverageModel(quiet).conditional_coverage(50, LinkState::Los) == doctest::Approx(1.0).epsilon(1e-12));

        // m = 1 reduces to noise factor times the two transforms
        Params rayleigh = reference();
        rayleigh.channel.m_l = 1;
        const CoverageModel r(rayleigh);
        const double s = r.transform_variable(80, LinkState::Los);
        const double noise = rayleigh.channel.sigma2 / (rayleigh.uav.p * antenna::uav_gain(rayleigh.uav.omega));
        const double want = std::exp(-s * noise) * r.laplace_los(s, LinkState::Los, 80, 0)[0] *
                            r.laplace_nlos(s, LinkState::Los, 80, 0)[0];
        CHECK(r.conditional_coverage(80, LinkState::Los) == doctest::Approx(want).epsilon(1e-14));
    }

    TEST_CASE("coverage probability reference values")
    {
        CHECK(close(coverage_probability(reference(60)).p_cov, oracle::p_cov_60, 1e-4));
        CHECK(close(coverage_probability(reference(120)).p_cov, oracle::p_cov_120, 1e-4));
        CHECK(std::abs(coverage_probability(reference(300)).p_cov - oracle::p_cov_300) < 1e-6);
        const auto r = coverage_probability(reference());
        CHECK(r.p_cov <= r.p_assoc);
        CHECK(r.abs_error <= 1e-4);
        CHECK(r.p_assoc == doctest::Approx(-std::expm1(-std::numbers::pi * 25e-6 * std::pow(coverage_radius(deg_to_rad(150), 120), 2))));

        Params sparse = reference();
        sparse.uav.lambda = 1e-12;
        CHECK(coverage_probability(sparse).p_cov < 1e-6);
    }

    TEST_CASE("coverage is non-increasing in the threshold")
    {
        for (double gamma : {50.0, 150.0})
        {
            double prev = 1.0;
            for (double db = -10; db <= 10; db += 2.5)
            {
                Params p = reference(gamma);
                p.thresholds.theta = db_to_linear(db);
                const double v = coverage_probability(p).p_cov;
                CHECK(v <= prev + 2e-4);
                prev = v;
            }
        }
    }

    TEST_CASE("optimum height")
    {
        const std::vector<double> one{77};
        CHECK(optimum_height(reference(), one).gamma == 77);
        const std::vector<double> empty;
        CHECK_THROWS_AS(optimum_height(reference(), empty), std::invalid_argument);
        const std::vector<double> bad{10, 10};
        CHECK_THROWS_AS(optimum_height(reference(), bad), std::invalid_argument);

        std::vector<double> grid;
        for (double g = 10; g <= 300; g += 10)
            grid.push_back(g);
        const auto coarse = optimum_height(reference(), grid, false);
        const auto fine = optimum_height(reference(), grid, true);
        CHECK(std::abs(fine.gamma - coarse.gamma) < 10);
        CHECK(fine.p_cov >= coarse.p_cov);
    }
}
