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

#ifndef UAVCOV_ANALYTIC_HPP
#define UAVCOV_ANALYTIC_HPP

#include <uavcov/losenv.hpp>
#include <uavcov/model.hpp>
#include <uavcov/quadrature.hpp>

#include <span>
#include <vector>

/// Closed-form coverage of a ground user served by a PPP of UAVs that share
/// one height and all have working backhaul.
///
/// UAVs whose cones reach the user have horizontal distances forming a 1-D
/// PPP of intensity 2 pi lambda r on [0, u], u = tan(omega/2) gamma, split by
/// the LOS step function into independent LOS and NLOS processes. With fading
/// averaged out the user is served by the nearest LOS or the nearest NLOS UAV,
/// whichever is stronger; that fixes the exclusion radii below which no
/// interferer of either type can sit. Coverage given the serving distance is
/// a finite sum of Laplace-transform derivatives (integer Nakagami shape of
/// the serving link), and the transforms reduce to plateau sums of 2F1.
namespace uavcov::analytic
{

/// Lower bounds on LOS (c_l) and NLOS (c_n) interferer distances.
struct ExclusionRadii
{
    double c_l;
    double c_n;
};

ExclusionRadii exclusion_radii(double r1, LinkState t1, double gamma, double omega, const ChannelParams& channel);

struct CoverageResult
{
    double p_cov = 0;
    double p_assoc = 0;
    double p_los_serving = 0;
    double abs_error = 0; // quadrature estimate for p_cov
};

/// One validated parameter set with its LOS plateau table over the user
/// window. Construction is cheap; every query is const and thread-safe.
class CoverageModel
{
  public:
    explicit CoverageModel(const Params& params);

    const Params& params() const { return params_; }
    double window_radius() const { return window_; }
    double association_probability() const;

    /// P_LOS(gamma, 0, r) for the UAV-user link.
    double p_los(double r) const;
    /// Integral of P_LOS(r) r dr over [0, x], exact per plateau (x clamped to the window).
    double los_moment(double x) const;
    /// Integral of (1 - P_LOS(r)) r dr over [0, x].
    double nlos_moment(double x) const;

    ExclusionRadii exclusion_radii(double r1, LinkState t1) const;
    double serving_density(double r1, LinkState t1) const;

    /// s_t = m_t theta (r1^2 + gamma^2)^{alpha_t / 2}.
    double transform_variable(double r1, LinkState t1) const;

    /// L(s) and its first `order` derivatives in s for the aggregate
    /// interference of `interferer`-type UAVs beyond `lower`. The transmit
    /// power and antenna gain are absorbed into s.
    std::vector<double> interference_transform(LinkState interferer, double s, double lower, int order) const;

    /// LOS interferers (beyond c_l(t1)) at transform variable s.
    std::vector<double> laplace_los(double s, LinkState t1, double r1, int order) const;
    /// NLOS interferers (beyond c_n(t1)).
    std::vector<double> laplace_nlos(double s, LinkState t1, double r1, int order) const;

    /// P(SINR >= theta | R1 = r1, t1). Throws std::runtime_error if the
    /// finite sum leaves [0, 1] by more than 1e-9.
    double conditional_coverage(double r1, LinkState t1) const;

    /// Points in (0, u) where the coverage integrand jumps or has a kink:
    /// plateau edges and the radii at which an exclusion radius crosses one.
    std::vector<double> integrand_breaks() const;

    CoverageResult coverage(const quad::Options& options = {}) const;
    double p_los_serving(const quad::Options& options = {}) const;

  private:
    Params params_;
    double window_;
    std::vector<los::Plateau> plateaus_;
    std::vector<double> cumulative_; // los moment at each plateau's lower edge
};

// Free-function forms over a parameter set.
double serving_density(double r1, LinkState t1, const Params& params);
double p_los_serving(const Params& params);
std::vector<double> laplace_los(double s, LinkState t1, double r1, const Params& params, int order);
std::vector<double> laplace_nlos(double s, LinkState t1, double r1, const Params& params, int order);
double conditional_coverage(double r1, LinkState t1, const Params& params);
CoverageResult coverage_probability(const Params& params, const quad::Options& options = {});

/// d^i/ds^i of (-A/s)^p, expanded as a double sum of rising factorials.
double power_derivative(int i, int p, double A, double s);

struct OptimumHeight
{
    double gamma;
    double p_cov;
};

/// Grid argmax of coverage over heights (ties go to the lower height). With
/// `refine`, a golden-section search over the neighbouring cells may move
/// the answer off-grid when it improves coverage.
OptimumHeight optimum_height(const Params& params, std::span<const double> gamma_grid, bool refine = false,
                             const quad::Options& options = {});

} // namespace uavcov::analytic

#endif
