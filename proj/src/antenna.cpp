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

#include <uavcov/antenna.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace uavcov::antenna
{

namespace
{

constexpr double kPi = std::numbers::pi;
constexpr double kVerticalBeamDeg = 10.0;
constexpr double kVerticalFloorDb = 20.0;
constexpr double kTotalFloor = 0.0031622776601683794; // 10^-2.5
// azimuth comparisons are inclusive up to rounding in atan2
constexpr double kAngleSlack = 1e-12;

} // namespace

double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

double uav_gain(double omega) { return 16.0 * kPi / (omega * omega); }

bool in_user_lobe(double gamma_uav, double r, double omega) { return r <= coverage_radius(omega, gamma_uav); }

double bs_vertical_gain(double phi, double phi_d)
{
    const double off_deg = rad_to_deg(phi + phi_d) / kVerticalBeamDeg;
    const double attenuation_db = std::min(12.0 * off_deg * off_deg, kVerticalFloorDb);
    return std::pow(10.0, -attenuation_db / 10.0);
}

double bs_total_gain(double phi, const BsParams& bs)
{
    return std::max(bs.eta_bh * bs_vertical_gain(phi, bs.phi_d), kTotalFloor);
}

RingSector backhaul_footprint(double gamma_uav, const BsParams& bs, double phi, double omega_b, Point2 center,
                              double heading)
{
    if (!(gamma_uav > bs.gamma_b))
        throw std::invalid_argument("backhaul footprint needs the UAV above the BS height");
    if (!(phi > 0 && phi <= kPi / 2))
        throw std::invalid_argument("backhaul footprint needs an elevation in (0, pi/2]");

    const double rise = gamma_uav - bs.gamma_b;
    const double half = omega_b / 2;
    constexpr double inf = std::numeric_limits<double>::infinity();

    const double minor = phi < kPi / 2 - half ? rise / std::tan(phi + half) : 0.0;

    double major = inf;
    if (omega_b >= kPi / 2 || phi <= half)
        major = inf;
    else if (phi < kPi / 2 - half)
        major = rise / std::tan(phi - half);
    else
        major = rise / std::tan(kPi / 2 - omega_b);

    return {center, omega_b, heading, minor, major};
}

bool sector_contains(const RingSector& s, Point2 p)
{
    const double rho = distance(s.center, p);
    if (rho < s.minor || rho > s.major)
        return false;
    if (rho == 0.0)
        return s.minor == 0.0;
    const double azimuth = std::atan2(p.y - s.center.y, p.x - s.center.x);
    const double diff = std::remainder(azimuth - s.heading, 2 * kPi);
    return std::abs(diff) <= s.arc / 2 + kAngleSlack;
}

} // namespace uavcov::antenna
