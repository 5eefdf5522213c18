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

#ifndef UAVCOV_LOSENV_HPP
#define UAVCOV_LOSENV_HPP

#include <uavcov/model.hpp>

#include <vector>

/// Urban blockage model: buildings on a square grid with Rayleigh heights.
///
/// A link of horizontal length r crosses d = floor(r * sqrt(beta * delta))
/// buildings. It is LOS when every crossed building is lower than the ray at
/// that building's position, so
///
///   P_LOS = prod_{n=0}^{d-1} (1 - exp(-(h_max - (n + 1/2) |h_tx - h_rx| / d)^2 / (2 kappa^2)))
///
/// with the empty product (d = 0) equal to 1. Since d only changes at
/// multiples of 1/sqrt(beta * delta), P_LOS is a step function of r.
namespace uavcov::los
{

struct LosQuery
{
    double gamma_tx; // m
    double gamma_rx; // m
    double r;        // horizontal distance, m
};

/// Number of buildings crossed by a link of horizontal length r.
int building_count(const EnvironmentParams& env, double r);

/// P_LOS for a link crossing exactly `d` buildings. Every other routine
/// in this namespace goes through here, so values are bit-identical.
double p_los_for_count(const EnvironmentParams& env, double gamma_tx, double gamma_rx, int d);

double p_los(const EnvironmentParams& env, const LosQuery& q);

/// Rayleigh(kappa) density of a building height.
double building_height_pdf(const EnvironmentParams& env, double h);

/// One constant piece of P_LOS on [lower, upper).
struct Plateau
{
    double lower;
    double upper;
    double value;
    int buildings;
};

/// P_LOS as floor(r_max * sqrt(beta * delta)) + 1 consecutive plateaus tiling [0, r_max].
std::vector<Plateau> p_los_piecewise(const EnvironmentParams& env, double gamma_tx, double gamma_rx, double r_max);

/// Distance of the j-th plateau breakpoint, j / sqrt(beta * delta).
double breakpoint(const EnvironmentParams& env, int j);

} // namespace uavcov::los

#endif
