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
#include <uavcov/parallel.hpp>
#include <uavcov/specfun.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace uavcov::analytic
{

namespace
{

constexpr double kPi = std::numbers::pi;
constexpr double kOvershoot = 1e-9;

double ipow(double x, int n)
{
    if (n < 0)
        return 1.0 / ipow(x, -n);
    double out = 1.0;
    for (int k = 0; k < n; ++k)
        out *= x;
    return out;
}

struct LinkLaw
{
    int m;
    double alpha;
};

LinkLaw law(const ChannelParams& ch, LinkState t)
{
    return t == LinkState::Los ? LinkLaw{ch.m_l, ch.alpha_l} : LinkLaw{ch.m_n, ch.alpha_n};
}

} // namespace

ExclusionRadii exclusion_radii(double r1, LinkState t1, double gamma, double omega, const ChannelParams& ch)
{
    const double g2 = gamma * gamma;
    const double d2 = r1 * r1 + g2;
    if (t1 == LinkState::Los)
        return {r1, std::sqrt(std::max(0.0, std::pow(d2, ch.alpha_l / ch.alpha_n) - g2))};
    const double reach = std::sqrt(std::max(0.0, std::pow(d2, ch.alpha_n / ch.alpha_l) - g2));
    return {std::min(coverage_radius(omega, gamma), reach), r1};
}

double power_derivative(int i, int p, double A, double s)
{
    double total = 0.0;
    for (int e = 0; e <= i; ++e)
        for (int n = 0; n <= e; ++n)
        {
            const double num = ipow(-1.0, n) * ipow(-A, e) * ipow(-A / s, p - e) * ipow(s, -i - e) *
                               specfun::rising_factorial(1.0 + p - e, e) *
                               specfun::rising_factorial(1.0 + n - i - e, i);
            total += num / (specfun::factorial(n) * specfun::factorial(e - n));
        }
    return total;
}

CoverageModel::CoverageModel(const Params& params) : params_(require_valid(params))
{
    window_ = coverage_radius(params_.uav.omega, params_.uav.gamma);
    plateaus_ = los::p_los_piecewise(params_.env, params_.uav.gamma, 0.0, window_);
    cumulative_.reserve(plateaus_.size());
    double acc = 0.0;
    for (const auto& pl : plateaus_)
    {
        cumulative_.push_back(acc);
        acc += pl.value * 0.5 * (pl.upper * pl.upper - pl.lower * pl.lower);
    }
}

double CoverageModel::association_probability() const
{
    return -std::expm1(-kPi * params_.uav.lambda * window_ * window_);
}

double CoverageModel::p_los(double r) const
{
    return los::p_los(params_.env, {params_.uav.gamma, 0.0, r});
}

double CoverageModel::los_moment(double x) const
{
    x = std::clamp(x, 0.0, window_);
    const int j = std::min(los::building_count(params_.env, x), static_cast<int>(plateaus_.size()) - 1);
    const auto& pl = plateaus_[static_cast<std::size_t>(j)];
    return cumulative_[static_cast<std::size_t>(j)] + pl.value * 0.5 * (x * x - pl.lower * pl.lower);
}

double CoverageModel::nlos_moment(double x) const
{
    x = std::clamp(x, 0.0, window_);
    return 0.5 * x * x - los_moment(x);
}

ExclusionRadii CoverageModel::exclusion_radii(double r1, LinkState t1) const
{
    return analytic::exclusion_radii(r1, t1, params_.uav.gamma, params_.uav.omega, params_.channel);
}

double CoverageModel::serving_density(double r1, LinkState t1) const
{
    if (r1 < 0 || r1 > window_)
        return 0.0;
    const double two_pi_lambda = 2.0 * kPi * params_.uav.lambda;
    const double pl = p_los(r1);
    const auto radii = exclusion_radii(r1, t1);
    if (t1 == LinkState::Los)
        return pl * two_pi_lambda * r1 * std::exp(-two_pi_lambda * (los_moment(r1) + nlos_moment(radii.c_n)));
    return (1.0 - pl) * two_pi_lambda * r1 * std::exp(-two_pi_lambda * (nlos_moment(r1) + los_moment(radii.c_l)));
}

double CoverageModel::transform_variable(double r1, LinkState t1) const
{
    const auto l = law(params_.channel, t1);
    const double g = params_.uav.gamma;
    return l.m * params_.thresholds.theta * std::pow(r1 * r1 + g * g, l.alpha / 2.0);
}

std::vector<double> CoverageModel::interference_transform(LinkState interferer, double s, double lower,
                                                          int order) const
{
    if (s < 0)
        throw std::invalid_argument("interference transform needs s >= 0");
    const auto l = law(params_.channel, interferer);
    const int m = l.m;
    const double alpha = l.alpha;
    const double delta = 2.0 / alpha;
    const double g2 = params_.uav.gamma * params_.uav.gamma;
    const double lambda = params_.uav.lambda;

    // G_i(b) = sum_k C(m,k) (-1)^{k+1} d^i/ds^i [ b 2F1(k, delta; 1+delta; -m b^{alpha/2} / s) ]
    auto boundary_terms = [&](double b) {
        std::vector<double> g(static_cast<std::size_t>(order) + 1, 0.0);
        const double A = m * std::pow(b, alpha / 2.0);
        const double z = -A / s;
        for (int k = 1; k <= m; ++k)
        {
            const double weight = specfun::binomial(m, k) * (k % 2 == 1 ? 1.0 : -1.0);
            std::vector<double> dfdz(static_cast<std::size_t>(order) + 1);
            for (int q = 0; q <= order; ++q)
                dfdz[q] = b * specfun::rising_factorial(k, q) * specfun::rising_factorial(delta, q) /
                          specfun::rising_factorial(1.0 + delta, q) *
                          specfun::hyp2f1(k + q, delta + q, 1.0 + delta + q, z);
            g[0] += weight * dfdz[0];
            for (int i = 1; i <= order; ++i)
            {
                double di = 0.0;
                for (int q = 1; q <= i; ++q)
                {
                    double uq = 0.0;
                    for (int t = 0; t < q; ++t)
                        uq += ipow(-1.0, t) * specfun::binomial(q, t) * ipow(z, t) * power_derivative(i, q - t, A, s);
                    di += uq / specfun::factorial(q) * dfdz[q];
                }
                g[i] += weight * di;
            }
        }
        return g;
    };

    // At s = 0 the derivatives are moments of the interference:
    // d^i/ds^i (m / (m + s x))^m at 0 = (-1)^i (m)_i (x/m)^i with x = (r^2+gamma^2)^{-alpha/2}.
    auto moment_terms = [&](double b) {
        std::vector<double> g(static_cast<std::size_t>(order) + 1, 0.0);
        for (int i = 1; i <= order; ++i)
        {
            const double expo = 1.0 - alpha * i / 2.0;
            const double antideriv = std::abs(expo) < 1e-14 ? 0.5 * std::log(b) : 0.5 * std::pow(b, expo) / expo;
            g[i] = ipow(-1.0, i) * specfun::rising_factorial(m, i) * ipow(1.0 / m, i) * antideriv;
        }
        return g;
    };

    std::vector<double> y(static_cast<std::size_t>(order) + 1, 0.0);
    double last_b = -1.0;
    std::vector<double> last_terms;
    for (const auto& pl : plateaus_)
    {
        const double lo = std::max(lower, pl.lower);
        const double hi = std::min(pl.upper, window_);
        if (!(lo < hi))
            continue;
        const double w = interferer == LinkState::Los ? pl.value : 1.0 - pl.value;
        if (w == 0.0)
            continue;
        const double b_lo = lo * lo + g2;
        const double b_hi = hi * hi + g2;
        const auto lo_terms = (b_lo == last_b) ? last_terms : (s > 0 ? boundary_terms(b_lo) : moment_terms(b_lo));
        auto hi_terms = s > 0 ? boundary_terms(b_hi) : moment_terms(b_hi);
        if (s > 0)
        {
            for (int i = 0; i <= order; ++i)
                y[i] += -kPi * lambda * w * (hi_terms[i] - lo_terms[i]);
        }
        else
        {
            // y^{(i)}(0) = 2 pi lambda int w g^{(i)}(r, 0) r dr; the antiderivative carries the 1/2
            for (int i = 1; i <= order; ++i)
                y[i] += 2.0 * kPi * lambda * w * (hi_terms[i] - lo_terms[i]);
        }
        last_b = b_hi;
        last_terms = std::move(hi_terms);
    }
    return specfun::exp_composite_derivatives(y);
}

std::vector<double> CoverageModel::laplace_los(double s, LinkState t1, double r1, int order) const
{
    return interference_transform(LinkState::Los, s, exclusion_radii(r1, t1).c_l, order);
}

std::vector<double> CoverageModel::laplace_nlos(double s, LinkState t1, double r1, int order) const
{
    return interference_transform(LinkState::Nlos, s, exclusion_radii(r1, t1).c_n, order);
}

double CoverageModel::conditional_coverage(double r1, LinkState t1) const
{
    const auto l = law(params_.channel, t1);
    const int order = l.m - 1;
    const double s = transform_variable(r1, t1);
    const auto los_t = laplace_los(s, t1, r1, order);
    const auto nlos_t = laplace_nlos(s, t1, r1, order);
    const double noise = params_.channel.sigma2 / (params_.uav.p * antenna::uav_gain(params_.uav.omega));
    const double noise_factor = std::exp(-noise * s);

    double total = 0.0;
    for (int n = 0; n <= order; ++n)
    {
        double inner = 0.0;
        for (const auto& t : specfun::multinomial_tuples(n))
            inner += t.coefficient * ipow(-noise, t.i_sigma) * noise_factor * los_t[t.i_l] * nlos_t[t.i_n];
        total += ipow(-s, n) / specfun::factorial(n) * inner;
    }
    if (total < -kOvershoot || total > 1.0 + kOvershoot)
    {
        std::ostringstream os;
        os.precision(17);
        os << "conditional coverage " << total << " outside [0, 1] at r1=" << r1 << " t1=" << to_string(t1);
        throw std::runtime_error(os.str());
    }
    return std::clamp(total, 0.0, 1.0);
}

std::vector<double> CoverageModel::integrand_breaks() const
{
    const auto& ch = params_.channel;
    const double g2 = params_.uav.gamma * params_.uav.gamma;
    std::vector<double> edges;
    for (std::size_t j = 1; j < plateaus_.size(); ++j)
        edges.push_back(plateaus_[j].lower);

    std::vector<double> out = edges;
    auto keep = [&](double v) {
        if (v > 0)
        {
            const double r = std::sqrt(v);
            if (r > 0 && r < window_)
                out.push_back(r);
        }
    };
    // LOS serving: c_n(r1) reaches 0 and each plateau edge
    keep(std::pow(g2, ch.alpha_n / ch.alpha_l) - g2);
    for (double x : edges)
        keep(std::pow(x * x + g2, ch.alpha_n / ch.alpha_l) - g2);
    // NLOS serving: c_l(r1) reaches each plateau edge and the window edge
    for (double x : edges)
        keep(std::pow(x * x + g2, ch.alpha_l / ch.alpha_n) - g2);
    keep(std::pow(window_ * window_ + g2, ch.alpha_l / ch.alpha_n) - g2);

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CoverageResult CoverageModel::coverage(const quad::Options& options) const
{
    auto integrand = [this](double r1) {
        double acc = 0.0;
        for (LinkState t : {LinkState::Los, LinkState::Nlos})
        {
            const double f = serving_density(r1, t);
            if (f > 0)
                acc += f * conditional_coverage(r1, t);
        }
        return acc;
    };
    const auto breaks = integrand_breaks();
    const auto res = quad::integrate(integrand, 0.0, window_, breaks, options);

    CoverageResult out;
    out.p_assoc = association_probability();
    out.p_cov = std::clamp(res.value, 0.0, out.p_assoc);
    out.abs_error = res.abs_error;
    out.p_los_serving = p_los_serving(options);
    return out;
}

double CoverageModel::p_los_serving(const quad::Options& options) const
{
    quad::Options tight = options;
    tight.abs_tol = std::min(options.abs_tol, 1e-9);
    const auto breaks = integrand_breaks();
    const auto res = quad::integrate([this](double r1) { return serving_density(r1, LinkState::Los); }, 0.0, window_,
                                     breaks, tight);
    return std::clamp(res.value / association_probability(), 0.0, 1.0);
}

double serving_density(double r1, LinkState t1, const Params& params)
{
    return CoverageModel(params).serving_density(r1, t1);
}

double p_los_serving(const Params& params) { return CoverageModel(params).p_los_serving(); }

std::vector<double> laplace_los(double s, LinkState t1, double r1, const Params& params, int order)
{
    return CoverageModel(params).laplace_los(s, t1, r1, order);
}

std::vector<double> laplace_nlos(double s, LinkState t1, double r1, const Params& params, int order)
{
    return CoverageModel(params).laplace_nlos(s, t1, r1, order);
}

double conditional_coverage(double r1, LinkState t1, const Params& params)
{
    return CoverageModel(params).conditional_coverage(r1, t1);
}

CoverageResult coverage_probability(const Params& params, const quad::Options& options)
{
    return CoverageModel(params).coverage(options);
}

OptimumHeight optimum_height(const Params& params, std::span<const double> grid, bool refine,
                             const quad::Options& options)
{
    if (grid.empty())
        throw std::invalid_argument("optimum height needs a non-empty grid");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw std::invalid_argument("optimum height grid must be strictly increasing");

    auto at = [&](double gamma) {
        Params p = params;
        p.uav.gamma = gamma;
        return coverage_probability(p, options).p_cov;
    };

    std::vector<double> values(grid.size());
    for_each_index(grid.size(), Exec::Parallel, [&](std::size_t i) { values[i] = at(grid[i]); });

    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] > values[best])
            best = i;
    OptimumHeight out{grid[best], values[best]};
    if (!refine || grid.size() == 1)
        return out;

    // golden-section search over the two cells around the grid winner
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = grid[best == 0 ? 0 : best - 1];
    double b = grid[std::min(best + 1, grid.size() - 1)];
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = at(x1);
    double f2 = at(x2);
    for (int it = 0; it < 40 && (b - a) > 1e-3; ++it)
    {
        if (f1 >= f2)
        {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = at(x1);
        }
        else
        {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = at(x2);
        }
    }
    const double x = f1 >= f2 ? x1 : x2;
    const double f = std::max(f1, f2);
    if (f > out.p_cov)
        out = {x, f};
    return out;
}

} // namespace uavcov::analytic
