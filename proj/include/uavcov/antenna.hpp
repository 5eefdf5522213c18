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

#ifndef UAVCOV_ANTENNA_HPP
#define UAVCOV_ANTENNA_HPP

#include <uavcov/model.hpp>

/// Gain patterns and backhaul illumination geometry.
///
/// UAV antennas are ideal cones: gain 16 pi / omega^2 inside the main lobe and
/// nothing outside. Terrestrial BSs use the 3GPP vertical pattern (3 dB width
/// 10 deg, 20 dB floor) scaled by a constant horizontal gain, floored at -25 dB.
namespace uavcov::antenna
{

struct Point2
{
    double x = 0;
    double y = 0;
};

double distance(Point2 a, Point2 b);

/// Footprint of the UAV backhaul beam on the BS-height plane: an annular
/// sector centred on the UAV, aimed along `heading`.
struct RingSector
{
    Point2 center;
    double arc;     // rad, equals the backhaul beamwidth
    double heading; // azimuth of the sector bisector (rad)
    double minor;   // inner radius (m)
    double major;   // outer radius (m), may be +infinity
};

double uav_gain(double omega);

/// True when a ground user at horizontal distance r lies in the cone of a UAV
/// at height gamma_uav, boundary included.
bool in_user_lobe(double gamma_uav, double r, double omega);

/// 3GPP vertical pattern (linear). `phi` is the elevation of the UAV seen
/// from the BS and may be negative; boresight sits at phi = -phi_d.
double bs_vertical_gain(double phi, double phi_d);

double bs_total_gain(double phi, const BsParams& bs);

/// Throws std::invalid_argument unless gamma_uav > bs.gamma_b and 0 < phi <= pi/2.
RingSector backhaul_footprint(double gamma_uav, const BsParams& bs, double phi, double omega_b, Point2 center,
                              double heading);

bool sector_contains(const RingSector& sector, Point2 point);

} // namespace uavcov::antenna

#endif
