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

#include <uavcov/quadrature.hpp>

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace uavcov;

TEST_SUITE("quadrature")
{
    TEST_CASE("smooth integrands")
    {
        const auto r = quad::integrate([](double x) { return std::exp(-x) * std::cos(3 * x); }, 0, 5, {}, {1e-13, 0, 4000});
        const double exact = (1 + std::exp(-5.0) * (3 * std::sin(15.0) - std::cos(15.0))) / 10;
        CHECK(std::abs(r.value - exact) < 1e-12);
        CHECK(r.abs_error < 1e-12);
        CHECK(quad::integrate([](double) { return 1.0; }, 2, 2, {}).value == 0.0);
        CHECK(quad::integrate([](double x) { return x; }, 1, 0, {}).value == doctest::Approx(-0.5));
    }

    TEST_CASE("declared kinks and jumps")
    {
        auto step = [](double x) { return x < 0.3 ? 1.0 : (x < 0.7 ? 2.0 + x : std::abs(x - 0.9)); };
        const double exact = 0.3 + (0.8 + 0.5 * (0.49 - 0.09)) + 0.5 * (0.04 + 0.01);
        const std::vector<double> breaks{0.3, 0.7, 0.9};
        const auto r = quad::integrate(step, 0, 1, breaks, {1e-14, 0, 4000});
        CHECK(std::abs(r.value - exact) < 1e-13);
        // the same integral without breakpoints still converges, with more work
        const auto blind = quad::integrate(step, 0, 1, {}, {1e-10, 0, 4000});
        CHECK(std::abs(blind.value - exact) < 1e-9);
        CHECK(blind.evaluations > r.evaluations);
    }

    TEST_CASE("failure names the worst panel")
    {
        quad::Options tight{1e-15, 0, 20};
        try
        {
            quad::integrate([](double x) { return 1.0 / std::sqrt(std::abs(x - 0.123456)); }, 0, 1, {}, tight);
            FAIL("expected a quadrature error");
        }
        catch (const quad::QuadratureError& e)
        {
            CHECK(e.lower <= 0.123456);
            CHECK(e.upper >= 0.123456);
            CHECK(e.error > 0);
        }
    }
}
