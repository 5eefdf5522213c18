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

#ifndef UAVCOV_MODEL_HPP
#define UAVCOV_MODEL_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace uavcov
{

// All quantities below are SI: metres, per-square-metre densities, watts,
// radians and linear (not dB) gains/thresholds. Unit conversion happens only
// in the config layer (config.hpp).

/// Urban building statistics driving the LOS law.
struct EnvironmentParams
{
    double beta = 300e-6; // buildings per m^2
    double delta = 0.5;   // built-up area fraction
    double kappa = 20.0;  // Rayleigh scale of building height (m)
};

struct UavParams
{
    double lambda = 25e-6; // UAV density (per m^2)
    double gamma = 120.0;  // common operating height (m)
    double gamma_max = 300.0; // height cap for the simulator (m)
    double omega = 150.0 * std::numbers::pi / 180.0;  // user-antenna beamwidth (rad)
    double omega_b = 20.0 * std::numbers::pi / 180.0; // backhaul-antenna beamwidth (rad)
    double p = 0.1; // transmit power (W)
};

struct BsParams
{
    double lambda_b = 5e-6; // BS density (per m^2)
    double gamma_b = 30.0;  // BS height (m)
    double p_b = 40.0;      // BS transmit power (W)
    double eta_bh = 0.31;   // horizontal antenna gain (linear)
    double phi_d = 10.0 * std::numbers::pi / 180.0; // downtilt (rad)
};

/// Pathloss exponents and Nakagami shapes; shapes are integers because the
/// coverage expansion is a finite sum over the serving shape.
struct ChannelParams
{
    double alpha_l = 2.1;
    double alpha_n = 4.0;
    int m_l = 3;
    int m_n = 1;
    double sigma2 = 1e-9; // noise power (W)
};

struct Thresholds
{
    double theta = 1.0;   // user SINR threshold (linear)
    double theta_b = 10.0; // backhaul SINR threshold (linear)
};

/// Complete validated parameter set. Defaults reproduce the reference urban
/// scenario (150 deg user beam, 5 BS/km^2, 0 dB user threshold, ...), with
/// lambda = 25/km^2 and gamma = 120 m as the operating point.
struct Params
{
    EnvironmentParams env;
    UavParams uav;
    BsParams bs;
    ChannelParams channel;
    Thresholds thresholds;
};

/// LOS/NLOS state of a link.
enum class LinkState
{
    Los,
    Nlos
};

inline const char* to_string(LinkState t) { return t == LinkState::Los ? "L" : "N"; }

/// One violated constraint found by validation.
struct Violation
{
    std::string field;
    double value;
    std::string constraint;
};

class ValidationError : public std::runtime_error
{
  public:
    explicit ValidationError(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const noexcept { return violations_; }

  private:
    std::vector<Violation> violations_;
};

/// Collects every invariant violation of an SI parameter set.
std::vector<Violation> check(const Params& params);

/// Throws ValidationError listing all violations; returns the set unchanged otherwise.
const Params& require_valid(const Params& params);

/// Radius of the ground disk illuminated by a cone of beamwidth omega at height gamma.
inline double coverage_radius(double omega, double gamma)
{
    return std::tan(omega / 2.0) * gamma;
}

double deg_to_rad(double deg);
double rad_to_deg(double rad);
double db_to_linear(double db);
double linear_to_db(double lin);

} // namespace uavcov

#endif
